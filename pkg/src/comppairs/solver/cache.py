"""Line-delimited JSON store of solved instances.

One record per line::

    {"n": 3, "objective": "max_c", "params": {"m": 4}, "optimum": "6",
     "witness": ["0", "1", "3", "7"], "complete": true, ...}

Two-layer witnesses are stored as a pair of such lists.  Large values are
decimal strings.  Loading re-counts the witness and refuses records whose
recount disagrees with the stored optimum.
"""

from __future__ import annotations

import json
import os

from ..counting import count_comparable, count_cross
from ..errors import CacheCorrupt
from ..lattice import SetFamily, make_family
from .search import SolveResult

CACHE_FILE = "results.jsonl"


def _masks(f: SetFamily) -> list[str]:
    return [str(x) for x in f.members]


def result_to_record(res: SolveResult) -> dict:
    if isinstance(res.witness, tuple):
        witness = [_masks(res.witness[0]), _masks(res.witness[1])]
    else:
        witness = _masks(res.witness)
    return {
        "n": res.n,
        "objective": res.objective,
        "params": dict(res.params),
        "optimum": str(res.optimum),
        "witness": witness,
        "complete": res.complete,
        "nodes": str(res.nodes),
        "prunes": str(res.prunes),
        "elapsed": res.elapsed,
    }


def recount(objective: str, witness) -> int:
    if objective == "two_layer_max":
        return count_cross(*witness)
    return count_comparable(witness).comparable


def record_to_result(rec: dict) -> SolveResult:
    try:
        n = int(rec["n"])
        objective = rec["objective"]
        if objective == "two_layer_max":
            witness = tuple(make_family(n, map(int, part)) for part in rec["witness"])
        else:
            witness = make_family(n, map(int, rec["witness"]))
        res = SolveResult(objective, n, dict(rec["params"]), int(rec["optimum"]), witness,
                          bool(rec["complete"]), int(rec.get("nodes", 0)),
                          int(rec.get("prunes", 0)), float(rec.get("elapsed", 0.0)))
    except (KeyError, TypeError, ValueError) as exc:
        raise CacheCorrupt(f"malformed cache record: {exc}") from None
    got = recount(objective, witness)
    if got != res.optimum:
        raise CacheCorrupt(f"witness recounts to {got}, record says {res.optimum}")
    return res


def _path(cache_dir: str) -> str:
    return os.path.join(cache_dir, CACHE_FILE)


def _key(n, objective, params) -> tuple:
    return (int(n), objective, tuple(sorted((k, int(v)) for k, v in params.items())))


def iter_records(cache_dir: str):
    path = _path(cache_dir)
    if not os.path.exists(path):
        return
    with open(path) as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                yield json.loads(line)
            except json.JSONDecodeError as exc:
                raise CacheCorrupt(f"{path}:{lineno}: {exc}") from None


def store_result(cache_dir: str, res: SolveResult) -> None:
    """Write ``res``, replacing any record with the same instance key."""
    os.makedirs(cache_dir, exist_ok=True)
    key = res.key
    kept = [r for r in iter_records(cache_dir)
            if _key(r["n"], r["objective"], r["params"]) != key]
    kept.append(result_to_record(res))
    tmp = _path(cache_dir) + ".tmp"
    with open(tmp, "w") as fh:
        for r in kept:
            fh.write(json.dumps(r, sort_keys=True) + "\n")
    os.replace(tmp, _path(cache_dir))


def load_result(cache_dir: str, n: int, objective: str, params: dict) -> SolveResult | None:
    """Stored result for the instance, or None on a cache miss."""
    key = _key(n, objective, params)
    found = None
    for rec in iter_records(cache_dir):
        try:
            rec_key = _key(rec["n"], rec["objective"], rec["params"])
        except (KeyError, TypeError, ValueError, AttributeError) as exc:
            raise CacheCorrupt(f"malformed cache record: {exc}") from None
        if rec_key == key:
            found = rec
    return None if found is None else record_to_result(found)
