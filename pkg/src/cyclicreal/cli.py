"""Command line entry point: ``cyclicreal {hom,compose,realize,show,verify}``.

Object literals: ``[n]`` (standard poset), ``[[n]]`` (standard ppset),
``product A B``, ``embedded 0,3@5`` (append ``-`` to the period for the
negative variant, e.g. ``embedded 0,3@5-``), ``@file.json``.
"""

from __future__ import annotations

import argparse
import inspect
import json
import random
import re
import sys

from . import cyclic as cy
from . import cyclic_realization as cr
from . import ppset as pp
from . import realization as rz
from .errors import CyclicRealError, ParseError
from .poset import FinitePoset, enumerate_monotone_maps, poset_from_json, product, standard_poset
from .verify import SUITES, run_suite


# --- literals -------------------------------------------------------------------------

def _parse_object(tokens: list[str]):
    """Consume one object literal from the front of ``tokens``."""
    if not tokens:
        raise ParseError("missing object literal")
    tok = tokens.pop(0)
    if m := re.fullmatch(r"\[\[(\d+)\]\]", tok):
        return pp.Standard(int(m[1]))
    if m := re.fullmatch(r"\[(\d+)\]", tok):
        return standard_poset(int(m[1]))
    if tok == "product":
        a, b = _parse_object(tokens), _parse_object(tokens)
        if isinstance(a, FinitePoset) and isinstance(b, FinitePoset):
            return product(a, b)
        if isinstance(a, pp.Ppset) and isinstance(b, pp.Ppset):
            return pp.Product(a, b)
        raise ParseError("product needs two posets or two ppsets")
    if tok == "embedded":
        if not tokens:
            raise ParseError("embedded needs reps@period")
        literal = tokens.pop(0)
        m = re.fullmatch(r"(-?\d+(?:,-?\d+)*)@(\d+)(-?)", literal)
        if not m:
            raise ParseError(f"bad embedded literal {literal!r}; expected e.g. 0,3@5")
        return pp.Embedded(tuple(int(x) for x in m[1].split(",")), int(m[2]), bool(m[3]))
    if tok.startswith("@"):
        return _load_object(tok[1:])
    raise ParseError(f"unrecognized object literal {tok!r}")


def _load_object(path: str):
    try:
        with open(path) as fh:
            text = fh.read()
        data = json.loads(text)
    except (OSError, json.JSONDecodeError) as e:
        raise ParseError(f"cannot read {path}: {e}") from e
    if "segments" in data:
        return cr.point_from_json(text)
    if "type" in data:
        return pp.ppset_from_dict(data)
    if "elements" in data:
        return poset_from_json(text)
    raise ParseError(f"{path}: not a poset, ppset or point")


def parse_object(text: str | list[str]):
    tokens = text.split() if isinstance(text, str) else list(text)
    obj = _parse_object(tokens)
    if tokens:
        raise ParseError(f"trailing tokens {' '.join(tokens)!r}")
    return obj


def _int_list(s: str) -> tuple[int, ...]:
    s = s.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ParseError(f"expected a bracketed list, got {s!r}")
    body = s[1:-1].strip()
    return tuple(int(x) for x in body.split(",")) if body else ()


def parse_morphism(text: str):
    """``chi=[..];u=r[;m=k]`` (pair model) or ``f=[..][;m=k]`` (periodic model, ``m`` defaults to ``n``)."""
    fields = {}
    for part in text.split(";"):
        key, sep, val = part.partition("=")
        if not sep:
            raise ParseError(f"bad morphism field {part!r}")
        fields[key.strip()] = val.strip()
    try:
        if "chi" in fields:
            chi = _int_list(fields["chi"])
            m = int(fields.get("m", max(chi)))
            return cy.DeltaTildeMor(len(chi) - 1, m, chi, int(fields.get("u", 0)))
        if "f" in fields:
            vals = _int_list(fields["f"])
            m = int(fields.get("m", len(vals) - 1))
            return cy.nabla(len(vals) - 1, m, vals)
    except CyclicRealError:
        raise
    except ValueError as e:
        raise ParseError(f"bad morphism {text!r}: {e}") from e
    raise ParseError(f"morphism literal needs chi= or f=: {text!r}")


# --- commands -------------------------------------------------------------------------

def cmd_hom(args) -> int:
    if args.kind in ("delta", "cyclic"):
        try:
            n, m = int(args.source), int(args.target)
        except ValueError:
            raise ParseError("hom delta|cyclic takes two object sizes")
        if args.kind == "delta":
            items = enumerate_monotone_maps(standard_poset(n), standard_poset(m))
            lines = [str(list(f.values)) for f in items]
        else:
            items = cy.hom_enumerate(n, m, args.model)
            lines = [str(f) for f in items]
    else:
        P, Q = parse_object(args.source), parse_object(args.target)
        if not (isinstance(P, FinitePoset) and isinstance(Q, FinitePoset)):
            raise ParseError("hom poset takes two poset literals")
        items = enumerate_monotone_maps(P, Q)
        lines = [str([Q.label(v) for v in f.values]) for f in items]
    if args.count_only:
        print(len(items))
    else:
        print("\n".join(lines))
    return 0


def _as_model(f, model: str):
    if model == "pair":
        return f if isinstance(f, cy.DeltaTildeMor) else cy.G(f)
    return f if isinstance(f, cy.NablaTildeMor) else cy.F(f)


def _compose_all(mors):
    """Compose right to left, as written: ``compose A B`` is ``A ∘ B``."""
    out = mors[-1]
    for g in reversed(mors[:-1]):
        if isinstance(out, cy.DeltaTildeMor):
            out = cy.compose_delta_tilde(_as_model(g, "pair"), out)
        else:
            out = cy.compose_nabla(_as_model(g, "nabla"), out)
    return out


def _oracle_agrees(a: cy.DeltaTildeMor, b: cy.DeltaTildeMor) -> bool:
    return cy.compose_delta_tilde(a, b) == cy.G(cy.compose_nabla(cy.F(a), cy.F(b)))


def cmd_compose(args) -> int:
    mors = [parse_morphism(t) for t in args.morphisms]
    if args.via_oracle:
        if len(mors) >= 2:
            pairs = [_as_model(f, "pair") for f in mors]
            ok = all(_oracle_agrees(a, b) for a, b in zip(pairs, pairs[1:]))
        else:
            rng = random.Random(args.seed)
            ok = True
            for _ in range(args.samples):
                n, m, k = (rng.randint(0, args.max_n) for _ in range(3))
                b = rng.choice(cy.hom_enumerate(n, m))
                a = rng.choice(cy.hom_enumerate(m, k))
                ok &= _oracle_agrees(a, b)
        print("OK" if ok else "MISMATCH")
        if not mors:
            return 0 if ok else 1
        if not ok:
            return 1
    if not mors:
        if args.via_oracle:
            return 0
        raise ParseError("compose needs at least one morphism literal")
    out = _compose_all(mors)
    if args.dual:
        out = cy.dual(_as_model(out, "nabla"))
    print(_as_model(out, args.model))
    return 0


def cmd_realize(args) -> int:
    obj = parse_object(args.object)
    if isinstance(obj, pp.Ppset):
        return _realize_ppset(obj, args)
    if not isinstance(obj, FinitePoset):
        raise ParseError("realize takes a poset or ppset literal")
    if args.export == "off":
        sys.stdout.write(rz.poset_to_off(obj))
        return 0
    cx = rz.cell_complex(obj)
    if args.export == "json":
        print(cx.to_json())
        return 0
    printed = False
    if args.f_vector:
        print(" ".join(map(str, cx.f_vector)))
        printed = True
    if args.euler:
        print(cx.euler_characteristic)
        printed = True
    if not printed:
        print(f"poset {obj!r} with {obj.size} elements")
        print(f"dimension {cx.dim}, f-vector {' '.join(map(str, cx.f_vector))}, euler {cx.euler_characteristic}")
        print(f"top cells: {len(cx.top_cells())}")
    return 0


def _realize_ppset(P: pp.Ppset, args) -> int:
    if args.export or args.f_vector or args.euler:
        raise ParseError("--f-vector, --euler and --export apply to posets")
    print(f"ppset {P!r}: degree {P.degree}, {P.orbit_count} orbits")
    if P.degree == 1 and pp.is_archimedean(P):
        positive = pp.is_positive(P)
        print(f"archimedean, {'positive' if positive else 'negative'}")
        if positive:
            nf = pp.archimedean_normal_form(P)
            print(f"isomorphic to [[{nf.n}]]; realization is |Δ_{nf.n}| x S^1")
    return 0


def cmd_show(args) -> int:
    obj = parse_object(args.object)
    if isinstance(obj, cr.CyclicPoint):
        print(obj.describe())
        if isinstance(obj.ppset, pp.Standard):
            b, s = cr.homeo_to_product(obj)
            print(f"barycentric {' '.join(map(str, b.coords))}; phase {s.s}")
    elif isinstance(obj, FinitePoset):
        print(repr(obj))
        for x, y in obj.covers():
            print(f"  {obj.label(x)} < {obj.label(y)}")
    else:
        print(pp.ppset_to_json(obj))
    return 0


def _suite_caps(fn, args) -> dict:
    params = inspect.signature(fn).parameters
    caps = {}
    if args.max_n is not None and "max_n" in params:
        caps["max_n"] = args.max_n
    if args.samples is not None and "samples" in params:
        caps["samples"] = args.samples
    return caps


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    ok = True
    for name in names:
        fn = SUITES.get(name)
        rep = run_suite(name, seed=args.seed, **(_suite_caps(fn, args) if fn else {}))
        print(rep.summary())
        for f in rep.failures[: args.show_failures]:
            print(f"  {f}")
        ok &= rep.ok
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cyclicreal", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    h = sub.add_parser("hom", help="enumerate morphisms")
    h.add_argument("kind", choices=["delta", "cyclic", "poset"])
    h.add_argument("source")
    h.add_argument("target")
    h.add_argument("--count-only", action="store_true")
    h.add_argument("--model", choices=["pair", "nabla"], default="pair")
    h.set_defaults(func=cmd_hom)

    c = sub.add_parser("compose", help="compose and normalize cyclic morphisms")
    c.add_argument("morphisms", nargs="*", help='e.g. "chi=[0,1];u=1" or "f=[0,2];m=1"')
    c.add_argument("--model", choices=["pair", "nabla"], default="pair")
    c.add_argument("--dual", action="store_true")
    c.add_argument("--via-oracle", action="store_true")
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--samples", type=int, default=200)
    c.add_argument("--max-n", type=int, default=4)
    c.set_defaults(func=cmd_compose)

    r = sub.add_parser("realize", help="cell structure of a realization")
    r.add_argument("object", nargs="+")
    r.add_argument("--f-vector", action="store_true")
    r.add_argument("--euler", action="store_true")
    r.add_argument("--export", choices=["off", "json"])
    r.set_defaults(func=cmd_realize)

    s = sub.add_parser("show", help="pretty-print an object or point")
    s.add_argument("object", nargs="+")
    s.set_defaults(func=cmd_show)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", help=f"one of: all, {', '.join(SUITES)}")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--max-n", type=int)
    v.add_argument("--samples", type=int)
    v.add_argument("--show-failures", type=int, default=5)
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CyclicRealError as e:
        if isinstance(e, ParseError):
            parser.print_usage(sys.stderr)
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
