"""Command-line surface: extend, check, match, analyze, gen, verify.

Graphs travel as graph6, one per line, on stdin or --input.  Human text by
default, JSON-lines with --json (a header object, one object per result,
one summary object).  Exit codes: 0 all good, 1 any semantic failure
(non-extendable input, counterexample, violator where success was required,
non-regular input to a command that needs regularity), 2 usage or parse
errors.  All randomness flows from --seed, so reports are byte-identical
across runs.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import generation, structure
from .extension import (
    ExtensionTrace,
    TheoremVerdict,
    classify,
    extend_to,
)
from .graph import Graph, Graph6Error, GraphError, format_graph6, parse_graph6, regularity
from .graph import components_after_deletion, is_connected
from .matching import (
    HallViolator,
    TutteViolator,
    is_valid_matching,
    max_matching,
    perfect_matching,
)

log = logging.getLogger("regext.cli")

CLIQUE_CLI_LIMIT = 40


def _edges_json(edges) -> list[list[int]]:
    return [list(e) for e in sorted(edges)]


def _vertices_json(vs) -> list[int]:
    return sorted(vs)


def certificate_json(obj) -> object:
    """Stable JSON form for every certificate the library produces."""
    if obj is None:
        return None
    if isinstance(obj, TutteViolator):
        return {"type": "tutte-violator", "s": _vertices_json(obj.s),
                "odd_count": obj.odd_count}
    if isinstance(obj, HallViolator):
        return {"type": "hall-violator", "s": _vertices_json(obj.s),
                "neighborhood": _vertices_json(obj.neighborhood)}
    if isinstance(obj, structure.BicliqueWitness):
        return {"type": "biclique", "part_a": _vertices_json(obj.part_a),
                "part_b": _vertices_json(obj.part_b)}
    if isinstance(obj, structure.OddCycle):
        return {"type": "odd-cycle", "vertices": list(obj.vertices)}
    if isinstance(obj, ExtensionTrace):
        return {"type": "trace", "start_r": obj.start_r, "target_r": obj.target_r,
                "steps": [_edges_json(s) for s in obj.steps],
                "final": format_graph6(obj.final)}
    if isinstance(obj, frozenset):
        return {"type": "vertex-set", "vertices": _vertices_json(obj)}
    raise TypeError(f"no JSON form for {type(obj)!r}")


def verdict_json(v: TheoremVerdict) -> dict:
    out = {"rule": v.rule, "applies": v.applies, "conclusion": v.conclusion}
    if v.evidence is not None:
        out["witness"] = certificate_json(v.evidence)
    if v.note:
        out["note"] = v.note
    return out


class Reporter:
    """Collects per-graph results and prints them in the selected format."""

    def __init__(self, command: str, options: dict, as_json: bool):
        self.command = command
        self.as_json = as_json
        self.ok_count = 0
        self.fail_count = 0
        if as_json:
            self._emit({"kind": "header", "command": command, "options": options})

    def _emit(self, obj: dict) -> None:
        print(json.dumps(obj, separators=(", ", ": ")))

    def result(self, ok: bool, human: str, payload: dict) -> None:
        if ok:
            self.ok_count += 1
        else:
            self.fail_count += 1
        if self.as_json:
            self._emit({"kind": "result", "ok": ok, **payload})
        else:
            print(human)

    def summary(self, extra: dict | None = None) -> int:
        data = {"kind": "summary", "ok": self.ok_count, "failed": self.fail_count}
        if extra:
            data.update(extra)
        if self.as_json:
            self._emit(data)
        else:
            bits = [f"ok={self.ok_count}", f"failed={self.fail_count}"]
            bits += [f"{k}={v}" for k, v in (extra or {}).items()]
            print("summary: " + " ".join(bits))
        return 0 if self.fail_count == 0 else 1


def _read_graphs(path: str | None) -> list[tuple[int, str, Graph]]:
    """Parse graph6 lines from a file or stdin; exit 2 on the first bad line."""
    stream = open(path, "r", encoding="ascii") if path else sys.stdin
    out = []
    try:
        for lineno, raw in enumerate(stream, start=1):
            line = raw.strip()
            if not line:
                continue
            try:
                out.append((lineno, line, parse_graph6(line)))
            except Graph6Error as exc:
                print(f"error: line {lineno}: {exc}", file=sys.stderr)
                raise SystemExit(2)
    finally:
        if path:
            stream.close()
    return out


def cmd_extend(args) -> int:
    reporter = Reporter("extend", {
        "target_r": args.target_r, "strategy": args.strategy,
        "backtrack": args.backtrack, "certificates": args.certificates,
    }, args.json)
    for lineno, line, g in _read_graphs(args.input):
        r = regularity(g)
        if r is None:
            reporter.result(False, f"line {lineno}: error: graph is not regular",
                            {"line": lineno, "graph6": line, "error": "not regular"})
            continue
        target = args.target_r if args.target_r is not None else r + 1
        try:
            res = extend_to(g, target, backtrack=args.backtrack, strategy=args.strategy)
        except GraphError as exc:
            reporter.result(False, f"line {lineno}: error: {exc}",
                            {"line": lineno, "graph6": line, "error": str(exc)})
            continue
        if isinstance(res, ExtensionTrace):
            payload = {"line": lineno, "graph6": line, "n": g.n, "r": r,
                       "final": format_graph6(res.final), "final_r": res.target_r}
            if args.certificates:
                payload["trace"] = certificate_json(res)
            reporter.result(True, f"line {lineno}: extended r={r} -> {res.target_r}: "
                                  f"{format_graph6(res.final)}", payload)
        else:
            payload = {"line": lineno, "graph6": line, "n": g.n, "r": r,
                       "stuck_r": res.reached_r,
                       "violator": certificate_json(res.violator)}
            reporter.result(False, f"line {lineno}: not extendable at r={res.reached_r}: "
                                   f"violator s={_vertices_json(res.violator.s)} "
                                   f"odd={res.violator.odd_count}", payload)
    return reporter.summary()


def cmd_check(args) -> int:
    reporter = Reporter("check", {}, args.json)
    for lineno, line, g in _read_graphs(args.input):
        if regularity(g) is None:
            reporter.result(False, f"line {lineno}: error: graph is not regular",
                            {"line": lineno, "graph6": line, "error": "not regular"})
            continue
        verdicts = classify(g, clique_search_limit=CLIQUE_CLI_LIMIT)
        applying = [v for v in verdicts if v.applies]
        text = ", ".join(f"{v.short_rule}: {v.conclusion}" for v in applying) or "none"
        reporter.result(True, f"line {lineno}: {text}",
                        {"line": lineno, "graph6": line,
                         "verdicts": [verdict_json(v) for v in verdicts]})
    return reporter.summary()


def cmd_match(args) -> int:
    reporter = Reporter("match", {"certificates": args.certificates}, args.json)
    for lineno, line, g in _read_graphs(args.input):
        res = perfect_matching(g)
        if isinstance(res, TutteViolator):
            m = max_matching(g)
            payload = {"line": lineno, "graph6": line, "size": len(m),
                       "perfect": False, "matching": _edges_json(m),
                       "violator": certificate_json(res)}
            reporter.result(False,
                            f"line {lineno}: max matching {len(m)} edges, no perfect "
                            f"matching: s={_vertices_json(res.s)} odd={res.odd_count}",
                            payload)
        else:
            payload = {"line": lineno, "graph6": line, "size": len(res),
                       "perfect": True}
            if args.certificates:
                payload["matching"] = _edges_json(res)
            reporter.result(True, f"line {lineno}: perfect matching with {len(res)} edges",
                            payload)
    return reporter.summary()


def cmd_analyze(args) -> int:
    reporter = Reporter("analyze", {}, args.json)
    for lineno, line, g in _read_graphs(args.input):
        rep = structure.balloons(g)
        comps = components_after_deletion(g)
        if g.n > CLIQUE_CLI_LIMIT:
            clique_size = None
            note = f"clique search skipped (n > {CLIQUE_CLI_LIMIT})"
        else:
            clique_size = 0
            while structure.find_clique(g, clique_size + 1) is not None:
                clique_size += 1
            note = None
        payload = {
            "line": lineno, "graph6": line, "n": g.n, "m": g.m,
            "r": regularity(g), "connected": is_connected(g),
            "components": [_vertices_json(c) for c in comps.blocks],
            "bridges": _edges_json(rep.bridges),
            "blocks": [_vertices_json(b) for b in rep.blocks],
            "balloons": [_vertices_json(b) for b in rep.balloons],
            "b": rep.b,
            "clique_number": clique_size,
        }
        if note:
            payload["note"] = note
        human = (f"line {lineno}: n={g.n} m={g.m} r={payload['r']} "
                 f"components={len(comps)} bridges={len(rep.bridges)} b={rep.b} "
                 f"clique={clique_size if clique_size is not None else 'skipped'}")
        reporter.result(True, human, payload)
    return reporter.summary()


def cmd_gen(args) -> int:
    # human mode emits bare graph6 lines so the output pipes into the other
    # commands; JSON mode gets the usual header/result/summary objects
    reporter = Reporter("gen", {
        "n": args.n, "r": args.r, "seed": args.seed,
        "enumerate": args.enumerate, "count": args.count,
        "connected": args.connected,
    }, args.json) if args.json else None
    try:
        if args.enumerate:
            graphs = generation.enumerate_regular(args.n, args.r, args.connected)
        else:
            def sampled():
                for i in range(args.count):
                    yield generation.random_regular(args.n, args.r, args.seed + i)
            graphs = sampled()
        for g in graphs:
            line = format_graph6(g)
            if reporter:
                reporter.result(True, line, {"graph6": line, "n": g.n, "r": args.r})
            else:
                print(line)
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return reporter.summary() if reporter else 0


# ---------------------------------------------------------------------------
# verify: empirical confirmation of each rule's guarantee on generated inputs


def _span(range_str: str | None, default: tuple[int, int]) -> tuple[int, int]:
    if not range_str:
        return default
    try:
        if ".." in range_str:
            a, b = range_str.split("..", 1)
            return int(a), int(b)
        v = int(range_str)
        return v, v
    except ValueError:
        raise SystemExit(2)


def _check_extends(g6: str) -> dict | None:
    from .extension import extend_once
    from .graph import complement
    g = parse_graph6(g6)
    res = extend_once(g, "auto")
    if isinstance(res, TutteViolator):
        return {"graph6": g6, "certificate": certificate_json(res)}
    _, m = res
    if not is_valid_matching(complement(g), m, perfect=True):
        return {"graph6": g6, "certificate": {"type": "invalid-matching"}}
    return None


def _check_extends_dirac(g6: str) -> dict | None:
    from .extension import extend_once
    g = parse_graph6(g6)
    res = extend_once(g, "dirac")
    if isinstance(res, TutteViolator):
        return {"graph6": g6, "certificate": certificate_json(res)}
    return None


def _check_has_pm(g6: str) -> dict | None:
    g = parse_graph6(g6)
    res = perfect_matching(g)
    if isinstance(res, TutteViolator):
        return {"graph6": g6, "certificate": certificate_json(res)}
    if not is_valid_matching(g, res, perfect=True):
        return {"graph6": g6, "certificate": {"type": "invalid-matching"}}
    return None


def _check_t4(g6: str) -> dict | None:
    from .extension import extend_once
    from .graph import complement
    g = parse_graph6(g6)
    verdicts = {v.rule: v for v in classify(g)}
    if not verdicts["T4-Impossible"].applies:
        return {"graph6": g6, "certificate": {"type": "rule-not-detected"}}
    if regularity(g) == g.n - 1:
        # no room for extend_once; the complement must still lack a matching
        res = perfect_matching(complement(g))
    else:
        res = extend_once(g, "auto")
    if not isinstance(res, TutteViolator) or not res.verify(complement(g)):
        return {"graph6": g6, "certificate": {"type": "extension-succeeded"}}
    return None


def _check_t5(g6: str) -> dict | None:
    g = parse_graph6(g6)
    res = extend_to(g, g.n - 1, backtrack=0)
    if not isinstance(res, ExtensionTrace) or not res.verify(g):
        return {"graph6": g6, "certificate": {"type": "full-extension-failed"}}
    return None


def _check_balloon(g6: str) -> dict | None:
    import random as _random
    g = parse_graph6(g6)
    from itertools import combinations
    for k in range(4):
        for s in combinations(range(g.n), k):
            chk = structure.check_balloon_bound(g, s)
            if chk.applicable and not chk.holds:
                return {"graph6": g6,
                        "certificate": {"type": "balloon-bound", "s": list(s),
                                        "lhs": str(chk.lhs), "rhs": str(chk.rhs)}}
    rng = _random.Random(g6)
    for _ in range(20):
        size = rng.randrange(4, g.n) if g.n > 4 else 0
        s = tuple(sorted(rng.sample(range(g.n), size))) if size else ()
        chk = structure.check_balloon_bound(g, s)
        if chk.applicable and not chk.holds:
            return {"graph6": g6,
                    "certificate": {"type": "balloon-bound", "s": list(s),
                                    "lhs": str(chk.lhs), "rhs": str(chk.rhs)}}
    return None


_RULE_CHECKERS = {
    "T1": _check_extends_dirac,
    "T2": _check_extends,
    "T3": _check_extends,
    "T4": _check_t4,
    "T5": _check_t5,
    "L": _check_has_pm,
    "C": _check_has_pm,
    "L0-balloon": _check_balloon,
}


def _verify_instances(rule: str, args) -> tuple[list[str], list[str]]:
    """Generate graph6 instances satisfying the rule hypotheses.

    Returns (instances, notices); infeasible cells are skipped with notice.
    """
    seed = args.seed
    samples = args.samples
    notices: list[str] = []
    out: list[str] = []

    def note(msg: str) -> None:
        notices.append(msg)

    if rule == "T1":
        lo, hi = _span(args.n_range, (4, 10))
        for n in range(lo + lo % 2, hi + 1, 2):
            for r in range((n - 1) // 2 + 1):
                if 2 * r >= n or (n * r) % 2:
                    continue
                if n <= generation.ENUMERATION_CAP:
                    out.extend(format_graph6(g)
                               for g in generation.enumerate_regular(n, r))
                else:
                    for i in range(samples):
                        out.append(format_graph6(
                            generation.random_regular(n, r, seed + 1000 * n + 10 * r + i)))
    elif rule == "T2":
        lo, hi = _span(args.n_range, (4, 60))
        cells = []
        for n in range(lo + lo % 2, hi + 1, 2):
            for r in range(0, n - 1, 2):
                ok = (3 * r < 2 * (n + 2)) if n >= 52 else (r < n - 16)
                if ok and (n * r) % 2 == 0:
                    cells.append((n, r))
        if not cells:
            note("empty hypothesis region")
            return out, notices
        for i in range(samples):
            n, r = cells[(seed + i) % len(cells)]
            out.append(format_graph6(generation.random_regular(n, r, seed + i)))
    elif rule in ("T3", "T4"):
        odd_parts = rule == "T4"
        # a spanning biclique forces r >= n/2, so the T3 region is empty
        # below n = 34
        lo, hi = _span(args.n_range, (34, 70) if rule == "T3" else (6, 40))
        cells = []
        for n in range(lo + lo % 2, hi + 1, 2):
            for r in range(n):
                if rule == "T3":
                    if r % 2:
                        continue
                    ok = (4 * r < 3 * n) if n >= 64 else (r < n - 16)
                    if not ok:
                        continue
                else:
                    if 2 * r < n:
                        continue
                try:
                    generation.sample_spanning_biclique_regular(n, r, 0, odd_parts)
                except GraphError:
                    continue
                cells.append((n, r))
        if not cells:
            note("no feasible (n, r) cells in range")
            return out, notices
        for i in range(samples):
            n, r = cells[(seed + i) % len(cells)]
            out.append(format_graph6(generation.sample_spanning_biclique_regular(
                n, r, seed + i, odd_parts)))
    elif rule == "T5":
        lo, hi = _span(args.n_range, (4, 24))
        cells = [(n, r) for n in range(lo + lo % 2, hi + 1, 2)
                 for r in range(n // 2, n)]
        if not cells:
            note("empty hypothesis region")
            return out, notices
        for i in range(samples):
            n, r = cells[(seed + i) % len(cells)]
            out.append(format_graph6(generation.sample_clique_pair_regular(
                n, r, seed + i)))
    elif rule in ("L", "C"):
        rlo, rhi = _span(args.r_range, (17, 17))
        for r in range(rlo + (rlo + 1) % 2, rhi + 1, 2):
            if r <= 15:
                note(f"r={r} skipped: rule needs r > 15")
                continue
            if rule == "L":
                nlo, nhi = _span(args.n_range, (r + 1 + (r + 1) % 2, 3 * r + 6))
                nhi = min(nhi, 3 * r + 6)
                for n in range(nlo + nlo % 2, nhi + 1, 2):
                    if n < r + 1:
                        continue
                    for i in range(samples):
                        out.append(format_graph6(generation.random_regular(
                            n, r, seed + 7919 * n + i)))
            else:
                nlo, nhi = _span(args.n_range, (2 * r + 2, 4 * r))
                nhi = min(nhi, 4 * r)
                for n in range(nlo + nlo % 2, nhi + 1, 2):
                    try:
                        g = generation.sample_disconnected_regular(n, r, seed + n)
                    except GraphError:
                        note(f"n={n}, r={r} skipped: no disconnected split")
                        continue
                    out.append(format_graph6(g))
                    for i in range(1, samples):
                        out.append(format_graph6(generation.sample_disconnected_regular(
                            n, r, seed + 7919 * n + i)))
    elif rule == "L0-balloon":
        lo, hi = _span(args.n_range, (4, 14))
        for n in range(lo + lo % 2, hi + 1, 2):
            for r in range(3, n, 2):
                if n <= generation.ENUMERATION_CAP:
                    out.extend(format_graph6(g)
                               for g in generation.enumerate_regular(n, r))
                else:
                    for i in range(max(1, samples // 10)):
                        out.append(format_graph6(generation.random_regular(
                            n, r, seed + 1000 * n + 10 * r + i)))
    else:
        raise SystemExit(2)
    return out, notices


def _run_ineq(args) -> tuple[int, list[dict]]:
    rlo, rhi = _span(args.r_range, (16, 200))
    checked = 0
    bad: list[dict] = []
    for r in range(max(rlo, 16), rhi + 1):
        for k in range(2, r - 1):
            checked += 1
            if not structure.check_ineq_kr(r, k):
                bad.append({"certificate": {"type": "ineq-kr", "r": r, "k": k}})
    for r in range(1, rhi + 1):
        x = Fraction(1)
        while x <= r:
            checked += 1
            if not structure.check_ineq_x(Fraction(r), x):
                bad.append({"certificate": {"type": "ineq-x", "r": r, "x": str(x)}})
            x += Fraction(1, 4)
    return checked, bad


def _pool_check(item: tuple[str, str]) -> dict | None:
    rule, g6 = item
    return _RULE_CHECKERS[rule](g6)


def cmd_verify(args) -> int:
    reporter = Reporter("verify", {
        "rule": args.rule, "n_range": args.n_range, "r_range": args.r_range,
        "samples": args.samples, "seed": args.seed, "jobs": args.jobs,
    }, args.json)
    if args.rule == "INEQ":
        checked, bad = _run_ineq(args)
        notices: list[str] = []
    else:
        instances, notices = _verify_instances(args.rule, args)
        checked = len(instances)
        items = [(args.rule, g6) for g6 in instances]
        if args.jobs > 1 and len(items) > 1:
            with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                results = list(pool.map(_pool_check, items, chunksize=16))
        else:
            results = [_pool_check(item) for item in items]
        bad = [r for r in results if r is not None]
    for notice in notices:
        log.info("skipped: %s", notice)
    for cx in bad:
        reporter.result(False, f"counterexample: {cx}", {"counterexample": cx})
    human = f"rule {args.rule}: checked {checked}, counterexamples {len(bad)}"
    if not args.json:
        print(human)
    return reporter.summary({"rule": args.rule, "checked": checked,
                             "skipped": len(notices)})


def main(argv: list[str] | None = None) -> int:
    level = {"error": logging.ERROR, "info": logging.INFO,
             "debug": logging.DEBUG}.get(os.environ.get("REGEXT_LOG", "error"))
    logging.basicConfig(stream=sys.stderr, level=level or logging.ERROR,
                        format="%(name)s %(levelname)s %(message)s")

    parser = argparse.ArgumentParser(
        prog="regext",
        description="Extend regular graphs by perfect matchings of the complement.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, certificates=True):
        p.add_argument("--input", help="graph6 file (default: stdin)")
        p.add_argument("--json", action="store_true", help="JSON-lines output")
        if certificates:
            p.add_argument("--certificates", action="store_true",
                           help="include certificates on success too")

    p = sub.add_parser("extend", help="raise regularity by matching addition")
    common(p)
    p.add_argument("--target-r", type=int, default=None, dest="target_r",
                   help="target degree (default r+1)")
    p.add_argument("--strategy", choices=["auto", "blossom", "dirac"], default="auto")
    p.add_argument("--backtrack", type=int, default=0,
                   help="alternative matchings to try per stuck level")
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("check", help="evaluate every extension rule")
    common(p, certificates=False)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("match", help="maximum/perfect matching with certificates")
    common(p)
    p.set_defaults(func=cmd_match)

    p = sub.add_parser("analyze", help="bridges, balloons, components, clique size")
    common(p, certificates=False)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("gen", help="sample or enumerate regular graphs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--count", type=int, default=1, help="number of samples")
    p.add_argument("--enumerate", action="store_true",
                   help="exhaustive enumeration up to isomorphism (n <= 10)")
    p.add_argument("--connected", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="confirm a rule's guarantee empirically")
    p.add_argument("--rule", required=True,
                   choices=["T1", "T2", "T3", "T4", "T5", "L", "C",
                            "L0-balloon", "INEQ"])
    p.add_argument("--n-range", dest="n_range", help="A..B")
    p.add_argument("--r-range", dest="r_range", help="A..B")
    p.add_argument("--samples", type=int, default=100,
                   help="samples per cell (L, C) or across the region")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
