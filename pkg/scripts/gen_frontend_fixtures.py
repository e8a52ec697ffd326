#!/usr/bin/env python3
"""Capture real API payloads as JSON fixtures for the frontend test suite.

The explorer never computes economics itself, so its tests replay these
server responses verbatim.  Regenerate after engine changes:

    python scripts/gen_frontend_fixtures.py
"""

import json
import tempfile
from pathlib import Path

from fastapi.testclient import TestClient

from macroatlas.api import create_app

OUT = Path(__file__).resolve().parent.parent / "frontend" / "tests" / "fixtures"


def dump(name: str, payload) -> None:
    OUT.joinpath(name).write_text(json.dumps(payload, indent=2, sort_keys=True),
                                  encoding="utf-8")
    print(f"wrote fixtures/{name}")


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    with tempfile.TemporaryDirectory() as tmp:
        client = TestClient(create_app(data_dir=tmp))

        dump("graph.json", client.get("/graph").json())

        scenario = client.post("/scenarios", json={}).json()
        dump("scenario.json", scenario)
        sid = scenario["id"]

        panels = {str(n): client.get(f"/scenarios/{sid}/panels/{n}").json()
                  for n in range(1, 28)}
        dump("panels.json", panels)

        noop = client.post(f"/scenarios/{sid}/shocks",
                           json={"field": "G", "value": 300.0}).json()
        dump("shock_noop.json", noop)

        shocked = client.post(f"/scenarios/{sid}/shocks",
                              json={"field": "Ms", "value": 1100.0}).json()
        dump("shock_ms.json", shocked)

        both = {str(n): client.get(f"/scenarios/{sid}/panels/{n}",
                                   params={"overlay": "both"}).json()
                for n in shocked["plan"]["dirty"]}
        dump("panels_both.json", both)

        error = client.post(f"/scenarios/{sid}/shocks",
                            json={"field": "c1", "value": 1.2})
        dump("shock_rejected.json",
             {"status": error.status_code, "body": error.json()})


if __name__ == "__main__":
    main()
