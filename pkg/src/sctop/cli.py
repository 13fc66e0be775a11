"""Command-line front end.

Exit codes: 0 success, 1 a verified property was violated, 2 usage or
parse error, 3 an enumeration cap was exceeded. With --json the output is
machine-readable and byte-identical across identical invocations.

Space and map arguments take DSL text directly, or @path to read a file.
"""

import argparse
import json
import os
import sys

from . import bits
from .catalog import SymbolicSpace, parse_descriptor, parse_open_form
from .completion import extend, strong_completion
from .dsl import elaborate, elaborate_map, parse_map, parse_space
from .errors import (CapExceeded, ParseError, SchemaError, SemanticError,
                     SctopError)
from .jsonio import Family, to_json, to_obj
from .maps import classify
from .order import DEFAULT_CAP
from .spaces import FinSpace
from .verify import (SUITES, results_to_obj, run_suites,
                     search_delta_counterexample, write_csv)


def _read_arg(text: str) -> str:
    if text.startswith("@"):
        with open(text[1:], "r", encoding="utf-8") as fh:
            return fh.read()
    return text


def _load_space(text: str):
    return elaborate(parse_space(_read_arg(text)))


def _load_map(text: str):
    return elaborate_map(parse_map(_read_arg(text)))


def _emit(args, obj, human: str) -> None:
    if args.json:
        print(json.dumps(obj, sort_keys=True, indent=2))
    else:
        print(human)


def _names(x: FinSpace):
    return x.names or tuple(str(i) for i in range(x.size))


def _render_family(x: FinSpace, masks) -> str:
    return ", ".join(bits.render(m, x.names) for m in masks) or "(none)"


def _parse_subset(x: FinSpace, text: str) -> int:
    names = _names(x)
    index = {nm: i for i, nm in enumerate(names)}
    mask = 0
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if part not in index:
            raise SemanticError(1, 1, f"unknown element {part!r}")
        mask |= 1 << index[part]
    return mask


def _write_outputs(args, target, title: str) -> None:
    out = getattr(args, "out", None)
    if out:
        from .dot import to_dot
        if out.endswith(".json"):
            with open(out, "w", encoding="utf-8") as fh:
                fh.write(to_json(target) + "\n")
        else:
            with open(out, "w", encoding="utf-8") as fh:
                fh.write(to_dot(target))
    fig = getattr(args, "fig", None)
    if fig:
        from .figures import render_hasse
        render_hasse(target, fig, title=title)


# ---------------------------------------------------------------------------


def cmd_info(args) -> int:
    value = _load_space(args.space)
    if isinstance(value, SymbolicSpace):
        obj = {"kind": "symbolic", "id": value.id,
               "doc": (value.__doc__ or "").strip().splitlines()[0]}
        _emit(args, obj, f"{value.id}: {obj['doc']}")
        return 0
    x = value
    obj = {
        "kind": "space",
        "size": x.size,
        "opens": len(x.opens),
        "names": list(_names(x)),
        "irreducible_sets": len(x.irr_sets(args.cap)),
        "strongly_complete": x.is_strongly_complete(args.cap),
        "dcpo": x.is_dcpo(args.cap),
        "sober": x.is_sober(args.cap),
        "connected": x.is_connected(),
    }
    human = (f"space with {x.size} points, {len(x.opens)} opens; "
             f"{obj['irreducible_sets']} irreducible sets; "
             f"strongly complete: {obj['strongly_complete']}, "
             f"dcpo: {obj['dcpo']}, sober: {obj['sober']}, "
             f"connected: {obj['connected']}")
    _emit(args, obj, human)
    _write_outputs(args, x, "specialization order")
    return 0


def cmd_irr(args) -> int:
    value = _load_space(args.space)
    if isinstance(value, SymbolicSpace):
        if not args.descriptor:
            print("a symbolic space needs --descriptor", file=sys.stderr)
            return 2
        d = parse_descriptor(args.descriptor)
        obj = {
            "entry": value.id,
            "descriptor": args.descriptor,
            "irreducible": value.is_irreducible(d),
            "directed": value.is_directed(d),
            "sup": value.sup(d),
        }
        sup = "absent" if obj["sup"] is None else value.describe_point(obj["sup"])
        _emit(args, obj,
              f"{value.id} / {args.descriptor}: irreducible {obj['irreducible']}, "
              f"directed {obj['directed']}, sup {sup}")
        return 0
    x = value
    masks = x.irr_plus_sets(args.cap) if args.plus else x.irr_sets(args.cap)
    fam = Family(x.size, masks)
    _emit(args, json.loads(to_json(fam)),
          ("Irr+ = " if args.plus else "Irr = ") + _render_family(x, masks))
    return 0


def cmd_si(args) -> int:
    value = _load_space(args.space)
    if isinstance(value, SymbolicSpace):
        if not args.open:
            print("a symbolic space needs --open", file=sys.stderr)
            return 2
        u = parse_open_form(args.open)
        ok = value.is_si_open(u)
        _emit(args, {"entry": value.id, "open": args.open, "si_open": ok},
              f"{value.id} / {args.open}: SI-open {ok}")
        return 0
    x = value
    si = x.si_opens(args.cap)
    obj = {"si_opens": json.loads(to_json(Family(x.size, si)))["sets"],
           "equals_original_topology": set(si) == x.opens}
    _emit(args, obj,
          f"SI opens: {_render_family(x, si)}\n"
          f"equals the original topology: {obj['equals_original_topology']}")
    return 0


def cmd_iclosure(args) -> int:
    x = _load_space(args.space)
    if isinstance(x, SymbolicSpace):
        print("iclosure works on finite spaces", file=sys.stderr)
        return 2
    a = _parse_subset(x, args.subset)
    cl = x.cl_i(a, args.cap)
    _emit(args, {"subset": bits.to_indices(a), "closure": bits.to_indices(cl)},
          f"cl_I({bits.render(a, x.names)}) = {bits.render(cl, x.names)}")
    return 0


def cmd_complete(args) -> int:
    value = _load_space(args.space)
    if isinstance(value, SymbolicSpace):
        sc = value.strong_completion()
        obj = {
            "entry": value.id,
            "completion": sc.completion.id,
            "new_points": [sc.completion.describe_point(c)
                           for c in sc.new_point_codes],
            "eta": "inclusion of the point codes",
            "notes": sc.notes,
        }
        human = (f"completion of {value.id} is {sc.completion.id}; "
                 f"new points: {', '.join(obj['new_points']) or 'none'}; "
                 f"eta is the inclusion\n{sc.notes}")
        _emit(args, obj, human)
        return 0
    x = value
    c = strong_completion(x, args.cap)
    names = _names(x)
    eta_pairs = [[names[p], c.completion.names[c.eta.table[p]]]
                 for p in range(x.size)]
    obj = {
        "base_size": x.size,
        "gamma_size": c.gamma.space.size,
        "completion_size": c.completion.size,
        "new_points": c.new_point_count,
        "eta": eta_pairs,
        "witnesses": c.witnesses,
    }
    human = (f"hyperspace has {c.gamma.space.size} SI-closed sets; "
             f"completion has {c.completion.size} points "
             f"({c.new_point_count} beyond the unit image)\n"
             + "\n".join(f"  eta: {a} -> {b}" for a, b in eta_pairs)
             + f"\nwitnesses: {c.witnesses}")
    _emit(args, obj, human)
    _write_outputs(args, c.completion, "strong completion")
    return 0


def cmd_checkmap(args) -> int:
    f = _load_map(args.map)
    rep = classify(f, args.cap)
    obj = {"flags": rep.flags(),
           "witnesses": {k: w.text for k, w in rep.witnesses.items()},
           "table": list(f.table)}
    human_lines = [f"{k}: {v}" for k, v in rep.flags().items()]
    for k, w in sorted(rep.witnesses.items()):
        human_lines.append(f"  witness[{k}]: {w.text}")
    _emit(args, obj, "\n".join(human_lines))
    return 0


def cmd_extend(args) -> int:
    f = _load_map(args.map)
    c = strong_completion(f.src, args.cap)
    fhat = extend(f, c, args.cap)
    dnames = _names(f.dst)
    pairs = [[c.completion.names[i], dnames[fhat.table[i]]]
             for i in range(c.completion.size)]
    obj = {"completion_size": c.completion.size, "extension": pairs,
           "factors_through_unit": all(
               fhat.table[c.eta.table[p]] == f.table[p] for p in range(f.src.size))}
    human = ("extension along the unit:\n"
             + "\n".join(f"  {a} -> {b}" for a, b in pairs)
             + f"\nfactors through the unit: {obj['factors_through_unit']}")
    _emit(args, obj, human)
    return 0


def cmd_truncate(args) -> int:
    value = _load_space(args.space)
    if not isinstance(value, SymbolicSpace):
        print("truncate works on catalog spaces", file=sys.stderr)
        return 2
    t = value.truncate(args.count)
    _emit(args, to_obj(t),
          f"truncation of {value.id} to {args.count} points: "
          f"{len(t.opens)} opens; names: {', '.join(t.names or ())}")
    _write_outputs(args, t, f"{value.id} truncated to {args.count}")
    return 0


def cmd_export(args) -> int:
    value = _load_space(args.space)
    if isinstance(value, SymbolicSpace):
        print("export works on finite spaces; use truncate for catalog entries",
              file=sys.stderr)
        return 2
    _write_outputs(args, value, "specialization order")
    targets = [p for p in (args.out, args.fig) if p]
    _emit(args, {"written": targets}, "wrote " + ", ".join(targets) if targets
          else "nothing to write (pass --out and/or --fig)")
    return 0


def cmd_verify(args) -> int:
    names = args.suite or list(SUITES)
    for name in names:
        if name not in SUITES:
            print(f"unknown suite {name!r}; known: {', '.join(SUITES)}",
                  file=sys.stderr)
            return 2
    results = run_suites(names, max_size=args.max_size)
    results.sort(key=lambda r: (r.suite, r.name))
    ok = all(r.passed for r in results)
    if args.report_dir:
        os.makedirs(args.report_dir, exist_ok=True)
        write_csv(results, os.path.join(args.report_dir, "results.csv"))
        from .figures import render_check_summary
        render_check_summary(results,
                             os.path.join(args.report_dir, "summary.png"))
    if args.json:
        print(json.dumps({"passed": ok, "results": results_to_obj(results)},
                         sort_keys=True, indent=2))
    else:
        for r in results:
            print(r.line())
        print(f"\n{'all suites passed' if ok else 'VIOLATIONS FOUND'} "
              f"({len(results)} checks)")
    return 0 if ok else 1


def cmd_search_delta(args) -> int:
    report = search_delta_counterexample(samples=args.samples,
                                         max_size=args.max_size,
                                         seed=args.seed)
    if args.json:
        print(json.dumps(report, sort_keys=True, indent=2))
    elif report["witness"] is None:
        print(f"no witness found: the I-open family was intersection-closed "
              f"on all {report['spaces_checked']} spaces "
              f"({report['pairs_checked']} pairs); this is not a proof")
    else:
        print(f"witness found: {report['witness']}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="sctop",
        description="irreducible sets, SI topology, and strong completions "
                    "of T0 spaces")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, space=False, maparg=False, out=False):
        p.add_argument("--json", action="store_true",
                       help="machine-readable output")
        p.add_argument("--cap", type=int, default=DEFAULT_CAP,
                       help="enumeration size cap")
        p.add_argument("--seed", type=int, default=0, help="sampling seed")
        if space:
            p.add_argument("--space", required=True,
                           help="space DSL text or @file")
        if maparg:
            p.add_argument("--map", required=True, help="map DSL text or @file")
        if out:
            p.add_argument("--out", help="write DOT (or JSON by extension)")
            p.add_argument("--fig", help="render a Hasse figure to this file")

    p = sub.add_parser("info", help="summary and predicates of a space")
    common(p, space=True, out=True)
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("irr", help="irreducible sets / descriptor queries")
    common(p, space=True)
    p.add_argument("--plus", action="store_true",
                   help="only sets whose sup exists")
    p.add_argument("--descriptor",
                   help="symbolic descriptor: whole | finite:1,2 | tail:5 | "
                        "cofinite:1,2 | column:3")
    p.set_defaults(func=cmd_irr)

    p = sub.add_parser("si", help="the irreducibly-derived topology")
    common(p, space=True)
    p.add_argument("--open", help="symbolic open form: tail:3 | cofinite:1 | ...")
    p.set_defaults(func=cmd_si)

    p = sub.add_parser("iclosure", help="I-closure of a subset")
    common(p, space=True)
    p.add_argument("--subset", required=True, help="comma-separated element names")
    p.set_defaults(func=cmd_iclosure)

    p = sub.add_parser("complete", help="strong completion")
    common(p, space=True, out=True)
    p.set_defaults(func=cmd_complete)

    p = sub.add_parser("checkmap", help="continuity grades of a map")
    common(p, maparg=True)
    p.set_defaults(func=cmd_checkmap)

    p = sub.add_parser("extend", help="extend a map along the unit")
    common(p, maparg=True)
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("truncate", help="finite truncation of a catalog space")
    common(p, space=True, out=True)
    p.add_argument("-n", "--count", type=int, required=True)
    p.set_defaults(func=cmd_truncate)

    p = sub.add_parser("export", help="write DOT/JSON/figure for a space")
    common(p, space=True, out=True)
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("verify", help="run the verification suites")
    common(p)
    p.add_argument("--suite", action="append",
                   help=f"suite name (repeatable); known: {', '.join(SUITES)}")
    p.add_argument("--max-size", type=int, default=4)
    p.add_argument("--report-dir",
                   help="write results.csv and summary.png here")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search-delta",
                       help="look for I-open families that fail to be a topology")
    common(p)
    p.add_argument("--samples", type=int, default=25)
    p.add_argument("--max-size", type=int, default=8)
    p.set_defaults(func=cmd_search_delta)

    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 2
    try:
        return args.func(args)
    except CapExceeded as e:
        print(f"cap exceeded: {e}", file=sys.stderr)
        return 3
    except (ParseError, SemanticError, SchemaError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (SctopError, KeyError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
