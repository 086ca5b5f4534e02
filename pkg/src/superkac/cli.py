"""Command-line front end: JSON in, JSON out.

Exit codes: 0 success, 1 malformed input, 2 domain error, 3 size cap exceeded,
4 a ``verify`` check failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .charring import G0IrrepLabel, kac_like_character
from .classify import (HighestWeightData, LocalFactor, ModuleDescriptor, change_of_borel,
                       dimension_and_characters, is_irreducible_kac_like, literal_shift)
from .coeffalg import StarPartner, TruncatedAlgebra, ZFunctional, annihilator_ideal, maximal_support
from .errors import DomainError, MalformedInput, SizeCapExceeded, SuperKacError
from .extblocks import BLOCK_CAVEAT, BlockUniverse, ext1_dispatch, same_block
from .rootdata import (AlgebraId, Family, Parity, Weight, _rat, all_roots, apply_chain,
                       cartan_basis, distinguished_borel, parse_rational, root, z_vector)

EXIT_OK, EXIT_MALFORMED, EXIT_DOMAIN, EXIT_CAP, EXIT_FAILED = 0, 1, 2, 3, 4


def load(arg: str):
    """Inline JSON (starting with '{' or '['), '-' for stdin, or a file path."""
    text = arg
    if arg == "-":
        text = sys.stdin.read()
    elif not arg.lstrip().startswith(("{", "[")):
        try:
            text = Path(arg).read_text()
        except OSError as exc:
            raise MalformedInput(f"cannot read {arg}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc


def _need(doc, key):
    if not isinstance(doc, dict) or key not in doc:
        raise MalformedInput(f"missing field {key!r}")
    return doc[key]


def _algebra(doc) -> AlgebraId:
    return AlgebraId.from_json(_need(doc, "algebra"))


def _factor(doc) -> tuple[AlgebraId, LocalFactor]:
    """A factor document {"algebra", "factor"} or a one-factor descriptor."""
    aid = _algebra(doc)
    if "factor" in doc:
        return aid, LocalFactor.from_json(doc["factor"])
    facs = _need(doc, "factors")
    if not isinstance(facs, list) or len(facs) != 1:
        raise MalformedInput("expected exactly one factor")
    return aid, LocalFactor.from_json(facs[0])


def _vlabel(raw, aid: AlgebraId) -> tuple:
    rank = len(Weight.zero(aid).hprime)
    if raw is None or raw == "trivial":
        return (0,) * rank
    if isinstance(raw, str):
        raw = json.loads(raw)
    if not isinstance(raw, list):
        raise MalformedInput("vlabel must be a list of integers or 'trivial'")
    lab = tuple(parse_rational(x) for x in raw)
    if len(lab) != rank:
        raise DomainError(f"vlabel needs {rank} entries")
    return lab


def _chain(raw, aid: AlgebraId):
    if isinstance(raw, str):
        raw = json.loads(raw)
    if not isinstance(raw, list):
        raise MalformedInput("chain must be a list of root coordinate lists")
    return [root(aid, c) for c in raw]


# verbs -----------------------------------------------------------------------

def cmd_describe_algebra(args) -> dict:
    aid = AlgebraId(Family(args.family), args.m, args.n)
    roots = all_roots(aid)
    dist = distinguished_borel(aid)
    even = [r.to_json() for r in roots if r.parity is Parity.EVEN]
    odd = [r.to_json() for r in roots if r.parity is Parity.ODD]
    rank = len(cartan_basis(aid))
    return {"algebra": aid.to_json(), "name": str(aid),
            "dim": {"even": len(even) + rank, "odd": len(odd)},
            "roots": {"even": even, "odd": odd},
            "positive_odd_count": len(dist.positive(Parity.ODD)),
            "distinguished_borel": dist.to_json(),
            "z": [_rat(x) for x in z_vector(aid)]}


def _kac_input(doc, args):
    aid = _algebra(doc)
    th = ZFunctional.from_json(_need(doc, "theta"))
    ideal = TruncatedAlgebra.from_json(doc["ideal"]) if "ideal" in doc else annihilator_ideal(th)
    lab = _vlabel(args.vlabel if getattr(args, "vlabel", None) is not None else doc.get("vlabel"), aid)
    return aid, th, ideal, lab


def cmd_kac_like(args) -> dict:
    doc = load(args.input)
    aid, th, ideal, lab = _kac_input(doc, args)
    label = G0IrrepLabel(Weight(lab, th.constant))
    label.check(aid)
    irr = is_irreducible_kac_like(th, ideal)
    ch = kac_like_character(label, ideal.dim, aid)
    sch = kac_like_character(label, ideal.dim, aid, super=True)
    out = {"algebra": aid.to_json(), "d": ideal.dim, "dim": sum(k for _, k in ch.terms),
           "sdim": sch.total(), "character": ch.to_json(), "supercharacter": sch.to_json(),
           "irreducible": irr, "k_theta": annihilator_ideal(th).to_json()}
    if args.realize:
        from .realize import bracket_residual, build_kac_like, build_superalgebra, character_of
        M = build_kac_like(build_superalgebra(aid), ideal, th, tuple(int(x) for x in lab))
        out["realized"] = {"dim": M.dim, "sdim": sum(-1 if p else 1 for p in M.parity),
                           "character_matches": character_of(M) == ch,
                           "bracket_residual": _rat(bracket_residual(M))}
    return out


def cmd_irreducible(args) -> dict:
    doc = load(args.input)
    aid, th, ideal, lab = _kac_input(doc, args)
    out = {"irreducible": is_irreducible_kac_like(th, ideal), "d": ideal.dim,
           "k_theta_dim": annihilator_ideal(th).dim}
    if args.oracle:
        from .realize import (build_kac_like, build_superalgebra, irreducibility_certificate,
                              submodule_search)
        M = build_kac_like(build_superalgebra(aid), ideal, th, tuple(int(x) for x in lab))
        out["oracle"] = submodule_search(M).to_json()
        certs = []
        for nhat in sorted(maximal_support(th)):
            if sum(nhat):
                c = irreducibility_certificate(M, StarPartner(nhat))
                certs.append({"nhat": list(nhat), "scalar": _rat(c.scalar), "mode": c.mode})
        out["certificates"] = certs
    return out


def cmd_character(args) -> dict:
    desc = ModuleDescriptor.from_json(load(args.input))
    dim, sdim, ch, sch = dimension_and_characters(desc)
    return {"descriptor": desc.to_json(), "dim": dim, "sdim": sdim,
            "character": ch.to_json(), "supercharacter": sch.to_json()}


def cmd_ext1(args) -> dict:
    a1, f1 = _factor(load(args.first))
    a2, f2 = _factor(load(args.second))
    if a1 != a2:
        raise DomainError("factors belong to different algebras")
    out = ext1_dispatch(f1, f2, a1).to_json()
    if args.oracle:
        from .classify import realize_over
        from .coeffalg import minimal_order
        from .realize import ext1_koszul
        orders: dict = {}
        for f in (f1, f2):
            orders[f.point] = max(orders.get(f.point, 1), minimal_order(f.local_theta()) + args.oracle)
        m1 = realize_over(ModuleDescriptor(a1, (f1,)), orders)
        m2 = realize_over(ModuleDescriptor(a1, (f2,)), orders)
        out["oracle_dim"] = ext1_koszul(m1, m2)
    return out


def cmd_blocks(args) -> dict:
    doc = load(args.universe)
    aid = _algebra(doc)
    facs = [LocalFactor.from_json(x) for x in _need(doc, "universe")]
    by_point: dict = {}
    for f in facs:
        by_point.setdefault(f.point, []).append(f)
    U = BlockUniverse(aid, by_point)
    out = U.to_json()
    if args.same:
        d1 = ModuleDescriptor.from_json(load(args.same[0]))
        d2 = ModuleDescriptor.from_json(load(args.same[1]))
        out["same_block"] = same_block(d1, d2, U)
    out["caveat"] = BLOCK_CAVEAT
    return out


def cmd_change_borel(args) -> dict:
    doc = load(args.input)
    if "factors" in doc:
        desc = ModuleDescriptor.from_json(doc)
        hw, aid = HighestWeightData.of(desc), desc.aid
    else:
        hw = HighestWeightData.from_json(doc)
        aid = hw.aid
    raw = args.chain if args.chain is not None else doc.get("chain")
    if raw is None:
        raise MalformedInput("no reflection chain given")
    chain = _chain(raw, aid)
    new = change_of_borel(hw, chain)
    out = {"highest_weight": new.to_json(),
           "borel": apply_chain(distinguished_borel(aid), chain).to_json()}
    if args.literal:
        out["literal_shift"] = literal_shift(hw, chain).to_json()
    return out


def cmd_verify(args) -> tuple[dict, int]:
    from .verify import run_all
    only = {int(x) for x in args.only.split(",")} if args.only else None
    results = run_all(quick=args.quick, only=only)
    for r in results:
        print(r.line(), file=sys.stderr)
    ok = all(r.passed for r in results)
    return {"passed": ok, "results": [r.to_json() for r in results]}, (EXIT_OK if ok else EXIT_FAILED)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="superkac", description=__doc__,
                                formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="verb", required=True)

    s = sub.add_parser("describe-algebra", help="roots and distinguished Borel")
    s.add_argument("--family", choices=["sl", "osp"], required=True)
    s.add_argument("--m", type=int, default=1)
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(fn=cmd_describe_algebra)

    for name, fn, hlp in (("kac-like", cmd_kac_like, "dimension and characters of K_{A/I}(Theta, V)"),
                          ("irreducible", cmd_irreducible, "irreducibility of K_{A/I}(Theta, V)")):
        s = sub.add_parser(name, help=hlp)
        s.add_argument("input", help="JSON with algebra, theta and optional ideal, vlabel")
        s.add_argument("--vlabel", help="'trivial' or a JSON list of Dynkin labels")
        if name == "kac-like":
            s.add_argument("--realize", action="store_true", help="also build the explicit module")
        else:
            s.add_argument("--oracle", action="store_true", help="run the submodule search")
        s.set_defaults(fn=fn)

    s = sub.add_parser("character", help="dimension and characters of a descriptor")
    s.add_argument("input")
    s.set_defaults(fn=cmd_character)

    s = sub.add_parser("ext1", help="Ext^1 between two local factors")
    s.add_argument("first")
    s.add_argument("second")
    s.add_argument("--oracle", type=int, nargs="?", const=1, default=0,
                   help="also solve cocycles over A/m^(n+k) (default k=1)")
    s.set_defaults(fn=cmd_ext1)

    s = sub.add_parser("blocks", help="local blocks over a finite universe")
    s.add_argument("universe")
    s.add_argument("--same", nargs=2, metavar=("D1", "D2"))
    s.set_defaults(fn=cmd_blocks)

    s = sub.add_parser("change-borel", help="highest weight after odd reflections")
    s.add_argument("input", help="descriptor or highest-weight data")
    s.add_argument("--chain", help="JSON list of odd roots (coordinates)")
    s.add_argument("--literal", action="store_true", help="also report the uncorrected shift")
    s.set_defaults(fn=cmd_change_borel)

    s = sub.add_parser("verify", help="run the property checks")
    s.add_argument("--quick", action="store_true")
    s.add_argument("--only", help="comma-separated criterion numbers")
    s.set_defaults(fn=cmd_verify)
    return p


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True, indent=2))


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        res = args.fn(args)
    except MalformedInput as exc:
        _emit({"error": {"code": exc.code, "message": str(exc)}})
        return EXIT_MALFORMED
    except SizeCapExceeded as exc:
        _emit({"error": {"code": exc.code, "message": str(exc)}})
        return EXIT_CAP
    except (SuperKacError, ValueError) as exc:
        code = getattr(exc, "code", "domain")
        _emit({"error": {"code": code, "message": str(exc)}})
        return EXIT_DOMAIN
    code = EXIT_OK
    if isinstance(res, tuple):
        res, code = res
    _emit(res)
    return code


def main() -> None:
    sys.exit(run())
