"""Scenario persistence and shock application.

Each scenario is one JSON document in the data directory, written with an
atomic temp-file rename.  A scenario keeps its creation parameters plus the
ordered shock history; the effective parameters are the fold of the history
over the creation parameters, and the current state is always re-derivable
from them.  Writes to one scenario are serialized behind a per-scenario lock
so concurrent shocks queue instead of racing.
"""

from __future__ import annotations

import json
import os
import threading
import uuid
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path

from .core import (
    EconState,
    MacroAtlasError,
    PARAM_FIELDS,
    ParamValidationError,
    Params,
)
from .equilibrium import short_run_ge
from .graph import BigPicture, PropagationPlan, canonical_graph
from .panels import PanelPayload, build_panel


class UnknownScenarioError(MacroAtlasError, KeyError):
    pass


@dataclass(frozen=True)
class Shock:
    field: str
    oldValue: float
    newValue: float
    timestamp: str

    def to_dict(self) -> dict:
        return {"field": self.field, "oldValue": self.oldValue,
                "newValue": self.newValue, "timestamp": self.timestamp}

    @classmethod
    def from_dict(cls, raw: dict) -> "Shock":
        return cls(field=raw["field"], oldValue=float(raw["oldValue"]),
                   newValue=float(raw["newValue"]), timestamp=raw["timestamp"])


@dataclass(frozen=True)
class Scenario:
    id: str
    params: Params                      # creation-time parameters
    baseline: EconState
    shocks: tuple[Shock, ...] = ()
    current: EconState | None = None
    lastPlan: PropagationPlan = field(
        default_factory=lambda: PropagationPlan(dirty=(), trigger=()))

    def effective_params(self) -> Params:
        """Creation parameters with the shock history folded on top."""
        p = self.params
        for shock in self.shocks:
            p = p.with_field(shock.field, shock.newValue)
        return p

    def replay(self) -> EconState:
        """Re-derive the current state from persisted history alone."""
        return short_run_ge(self.effective_params())

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "params": self.params.to_dict(),
            "baseline": self.baseline.to_dict(),
            "shocks": [s.to_dict() for s in self.shocks],
            "current": (self.current or self.baseline).to_dict(),
            "lastPlan": self.lastPlan.to_dict(),
        }

    @classmethod
    def from_dict(cls, raw: dict) -> "Scenario":
        return cls(
            id=raw["id"],
            params=Params.from_dict(raw["params"]),
            baseline=EconState.from_dict(raw["baseline"]),
            shocks=tuple(Shock.from_dict(s) for s in raw.get("shocks", ())),
            current=EconState.from_dict(raw["current"]),
            lastPlan=PropagationPlan.from_dict(raw.get("lastPlan", {})),
        )


def _utc_now() -> str:
    return datetime.now(timezone.utc).isoformat()


class ScenarioStore:
    """Directory-backed scenario registry."""

    def __init__(self, data_dir: str | os.PathLike,
                 graph: BigPicture | None = None):
        self.data_dir = Path(data_dir)
        self.data_dir.mkdir(parents=True, exist_ok=True)
        self.graph = graph or canonical_graph()
        self._locks: dict[str, threading.RLock] = {}
        self._registry_lock = threading.Lock()

    # -- plumbing -------------------------------------------------------

    def _path(self, scenario_id: str) -> Path:
        return self.data_dir / f"{scenario_id}.json"

    def _lock(self, scenario_id: str) -> threading.RLock:
        with self._registry_lock:
            return self._locks.setdefault(scenario_id, threading.RLock())

    def _write(self, scenario: Scenario) -> None:
        path = self._path(scenario.id)
        tmp = path.with_suffix(".json.tmp")
        tmp.write_text(json.dumps(scenario.to_dict(), indent=2, sort_keys=True),
                       encoding="utf-8")
        os.replace(tmp, path)

    def _read(self, scenario_id: str) -> Scenario:
        path = self._path(scenario_id)
        if not path.exists():
            raise UnknownScenarioError(scenario_id)
        return Scenario.from_dict(json.loads(path.read_text(encoding="utf-8")))

    def list_ids(self) -> list[str]:
        return sorted(p.stem for p in self.data_dir.glob("*.json"))

    # -- operations -------------------------------------------------------

    def create(self, params: Params | None = None) -> Scenario:
        params = params if params is not None else Params()
        baseline = short_run_ge(params)
        scenario = Scenario(id=uuid.uuid4().hex[:12], params=params,
                            baseline=baseline, current=baseline)
        with self._lock(scenario.id):
            self._write(scenario)
        return scenario

    def get(self, scenario_id: str) -> Scenario:
        with self._lock(scenario_id):
            return self._read(scenario_id)

    def apply_shock(self, scenario_id: str, field_name: str,
                    new_value: float) -> tuple[Scenario, PropagationPlan]:
        """Shock one parameter, re-solve, and persist atomically.

        On any failure (unknown field, invalid value, solver trouble) the
        persisted document is left untouched.
        """
        with self._lock(scenario_id):
            scenario = self._read(scenario_id)
            if field_name not in PARAM_FIELDS:
                raise ParamValidationError(f"unknown parameter {field_name!r}")
            effective = scenario.effective_params()
            old_value = getattr(effective, field_name)
            shocked = effective.with_field(field_name, new_value)
            current = short_run_ge(shocked)  # may raise; nothing persisted yet
            plan = self.graph.propagate({field_name})
            updated = Scenario(
                id=scenario.id,
                params=scenario.params,
                baseline=scenario.baseline,
                shocks=scenario.shocks + (Shock(
                    field=field_name, oldValue=float(old_value),
                    newValue=float(new_value), timestamp=_utc_now()),),
                current=current,
                lastPlan=plan,
            )
            self._write(updated)
            return updated, plan

    def panel(self, scenario_id: str, node_id: int, overlay: str = "current",
              n: int | None = None, lo: float | None = None,
              hi: float | None = None) -> PanelPayload:
        scenario = self.get(scenario_id)
        dirty = node_id in scenario.lastPlan.dirty
        kwargs = {"lo": lo, "hi": hi}
        if n is not None:
            kwargs["n"] = n
        return build_panel(
            self.graph, node_id,
            current=(scenario.effective_params(), scenario.current),
            baseline=(scenario.params, scenario.baseline),
            overlay=overlay, dirty=dirty, **kwargs)

    def compare(self, id_a: str, id_b: str) -> dict[str, float]:
        """Field-by-field current-state deltas, b minus a."""
        a = self.get(id_a)
        b = self.get(id_b)
        da, db = a.current.to_dict(), b.current.to_dict()
        return {name: db[name] - da[name] for name in da}
