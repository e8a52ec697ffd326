import { ApiClient } from "./api.js";
import { Explorer } from "./app.js";

// Point the explorer at a remote engine with ?api=http://host:port
const params = new URLSearchParams(window.location.search);
const base = params.get("api") ?? "";
const root = document.getElementById("app");
if (!root) throw new Error("missing #app mount point");

void new Explorer(root, new ApiClient(base)).start();
