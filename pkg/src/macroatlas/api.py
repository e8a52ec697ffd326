"""HTTP/JSON boundary for the scenario service.

Routes:
    GET  /graph
    POST /scenarios                      body: flat params (partial ok)
    GET  /scenarios/{id}
    POST /scenarios/{id}/shocks          body: {"field": name, "value": number}
    GET  /scenarios/{id}/panels/{n}      ?overlay=current|baseline|both&points=&lo=&hi=
    GET  /compare?a=&b=

Bind address and data directory come from MACROATLAS_ADDR / MACROATLAS_DATA
(or the --addr / --data flags of ``python -m macroatlas.api``).
"""

from __future__ import annotations

import argparse
import os

from fastapi import Body, FastAPI, Query
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from .core import ParamValidationError, Params
from .graph import UnknownNodeError, UnknownParameterError, canonical_graph
from .roots import SolverError
from .store import ScenarioStore, UnknownScenarioError

DEFAULT_ADDR = "127.0.0.1:8042"


def create_app(data_dir: str | None = None) -> FastAPI:
    data_dir = data_dir or os.environ.get("MACROATLAS_DATA", "./macroatlas-data")
    graph = canonical_graph()
    store = ScenarioStore(data_dir, graph=graph)
    app = FastAPI(title="macroatlas", version="0.1.0")
    app.state.store = store
    # the explorer is served separately from the API
    app.add_middleware(CORSMiddleware, allow_origins=["*"], allow_methods=["*"],
                       allow_headers=["*"])

    @app.exception_handler(ParamValidationError)
    async def _validation(request, exc):
        return JSONResponse(status_code=400, content={"error": str(exc)})

    @app.exception_handler(UnknownParameterError)
    async def _unknown_param(request, exc):
        return JSONResponse(status_code=400, content={"error": f"unknown parameter {exc}"})

    @app.exception_handler(UnknownScenarioError)
    async def _unknown_scenario(request, exc):
        return JSONResponse(status_code=404, content={"error": f"unknown scenario {exc}"})

    @app.exception_handler(UnknownNodeError)
    async def _unknown_node(request, exc):
        return JSONResponse(status_code=404, content={"error": f"unknown node {exc}"})

    @app.exception_handler(SolverError)
    async def _solver(request, exc):
        return JSONResponse(status_code=422, content={"error": str(exc)})

    @app.get("/graph")
    def get_graph():
        return graph.to_json_dict()

    @app.post("/scenarios", status_code=201)
    def create_scenario(overrides: dict = Body(default={})):
        params = Params.from_dict({**Params().to_dict(), **overrides}) \
            if overrides else Params()
        return store.create(params).to_dict()

    @app.get("/scenarios/{scenario_id}")
    def get_scenario(scenario_id: str):
        return store.get(scenario_id).to_dict()

    @app.post("/scenarios/{scenario_id}/shocks")
    def post_shock(scenario_id: str, body: dict = Body(...)):
        if "field" not in body or "value" not in body:
            raise ParamValidationError('shock body needs "field" and "value"')
        try:
            value = float(body["value"])
        except (TypeError, ValueError):
            raise ParamValidationError(
                f"non-numeric shock value {body['value']!r}") from None
        scenario, plan = store.apply_shock(scenario_id, body["field"], value)
        return {"scenario": scenario.to_dict(), "plan": plan.to_dict()}

    @app.get("/scenarios/{scenario_id}/panels/{node_id}")
    def get_panel(scenario_id: str, node_id: int,
                  overlay: str = Query(default="current"),
                  points: int | None = Query(default=None, ge=2, le=10_001),
                  lo: float | None = Query(default=None),
                  hi: float | None = Query(default=None)):
        if overlay not in ("current", "baseline", "both"):
            raise ParamValidationError(f"unknown overlay {overlay!r}")
        payload = store.panel(scenario_id, node_id, overlay=overlay,
                              n=points, lo=lo, hi=hi)
        return payload.to_dict()

    @app.get("/compare")
    def compare(a: str = Query(...), b: str = Query(...)):
        return {"a": a, "b": b, "deltas": store.compare(a, b)}

    return app


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="macroatlas.api",
                                     description="Serve the scenario API")
    parser.add_argument("--addr", default=os.environ.get("MACROATLAS_ADDR",
                                                         DEFAULT_ADDR),
                        help="host:port to bind (env MACROATLAS_ADDR)")
    parser.add_argument("--data", default=None,
                        help="scenario directory (env MACROATLAS_DATA)")
    args = parser.parse_args(argv)
    host, _, port = args.addr.partition(":")

    import uvicorn

    uvicorn.run(create_app(args.data), host=host or "127.0.0.1",
                port=int(port or 8042))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
