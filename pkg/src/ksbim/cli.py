"""Command-line interface.

Generator indices and Bott-Samelson sequences are 1-based and comma
separated on the command line (``--seq 1,2,1``); weights are comma-separated
integers in the fundamental-weight basis.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from . import bimodule, demazure, frobenius, homspace
from .errors import KSBimError
from .laurent import LaurentPoly, format_poly, monomial, parse_poly
from .root_datum import RootDatum, build_root_datum

EPS_SEP = " (x) "


@dataclass
class CliConfig:
    datum_spec: str
    output: str = "text"
    seed: int = 0
    budget: int = homspace.DEFAULT_BUDGET


class UsageError(Exception):
    pass


def _int_list(text: str, what: str) -> list[int]:
    text = text.strip()
    if text in ("", "e", "()"):
        return []
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise UsageError(f"{what} must be comma-separated integers, got {text!r}") from None


def _word(text: str, what: str = "sequence") -> tuple[int, ...]:
    return tuple(i - 1 for i in _int_list(text, what))


def _poly(datum: RootDatum, text: str) -> LaurentPoly:
    if text.lstrip().startswith("{"):
        return LaurentPoly.from_json(json.loads(text), datum.rank)
    return parse_poly(text, datum.rank)


def _load_datum(cfg: CliConfig) -> RootDatum:
    spec = cfg.datum_spec
    if spec.startswith("@") or spec.endswith(".json"):
        path = Path(spec.lstrip("@"))
        return build_root_datum(json.loads(path.read_text()))
    return build_root_datum(spec)


def _wlabel(word: Sequence[int]) -> str:
    return "(" + ",".join(str(s + 1) for s in word) + ")"


def _eps_label(eps: Sequence[int]) -> str:
    return "b" + "".join(map(str, eps)) if eps else "b"


def _basis_text(datum: RootDatum, word: Sequence[int], eps: Sequence[int]) -> str:
    slots = ["1"]
    for s, bit in zip(word, eps):
        slots.append(format_poly(monomial(datum.fundamental_weight(s))) if bit else "1")
    return EPS_SEP.join(slots)


def _combination(coeffs: Sequence[LaurentPoly], labels: Sequence[str]) -> str:
    parts = [f"({format_poly(c)}) {lab}" for c, lab in zip(coeffs, labels) if c]
    return " + ".join(parts) if parts else "0"


def _matrix_text(m: bimodule.BimoduleMorphism) -> list[str]:
    return ["  [" + ", ".join(format_poly(a) for a in row) + "]" for row in m.matrix]


# --------------------------------------------------------------------------
# Subcommands; each returns (text lines, json document)
# --------------------------------------------------------------------------

def cmd_rootdatum_info(datum: RootDatum, args, cfg):
    w0 = datum.longest
    doc = {
        "type": datum.label,
        "rank": datum.rank,
        "cartan": [list(r) for r in datum.cartan],
        "positive_roots": len(datum.positive_roots),
        "positive_root_list": [list(r) for r in datum.positive_roots],
        "weyl_order": datum.order,
        "longest_word": [s + 1 for s in w0.word],
    }
    lines = [
        f"type: {datum.label or 'custom'}",
        f"rank: {datum.rank}",
        f"cartan: {doc['cartan']}",
        f"positive roots: {doc['positive_roots']}",
        f"weyl group order: {datum.order}",
        f"longest element: {w0.label()} (length {w0.length})",
    ]
    return lines, doc


def cmd_demazure(datum, args, cfg):
    word = _word(args.word, "--word")
    lam = tuple(_int_list(args.monomial, "--monomial"))
    datum.check_weight(lam)
    result = demazure.demazure_word(datum, word, monomial(lam))
    doc = {"word": [s + 1 for s in word], "monomial": list(lam), "result": result.to_json(),
           "text": format_poly(result)}
    return [format_poly(result)], doc


def cmd_character(datum, args, cfg):
    lam = tuple(_int_list(args.highest_weight, "--highest-weight"))
    chi = demazure.irr_character(datum, lam)
    dim = demazure.weyl_dim(datum, lam)
    doc = {"highest_weight": list(lam), "character": chi.to_json(), "text": format_poly(chi),
           "dimension": dim}
    return [format_poly(chi), f"dimension: {dim}"], doc


def cmd_induction(datum, args, cfg):
    f = _poly(datum, args.poly)
    result = demazure.induction(datum, f, args.method)
    doc = {"method": args.method, "input": f.to_json(), "result": result.to_json(),
           "text": format_poly(result)}
    return [format_poly(result)], doc


def cmd_steinberg(datum, args, cfg):
    sd = frobenius.steinberg(datum)
    doc = {"type": datum.label, **sd.to_json()}
    lines = [f"order: {' '.join(w.label() for w in sd.elements)}", "basis:"]
    lines += [f"  {w.label()}: {format_poly(b)}" for w, b in zip(sd.elements, sd.basis)]
    lines.append(f"det: {format_poly(sd.det)}")
    lines.append("dual:")
    lines += [f"  {w.label()}: {format_poly(b)}" for w, b in zip(sd.elements, sd.dual)]
    return lines, doc


def cmd_bs_basis(datum, args, cfg):
    word = _word(args.seq, "--seq")
    for s in word:
        datum.check_index(s)
    labels = bimodule.basis_labels(word)
    doc = {"seq": [s + 1 for s in word], "rank": len(labels),
           "basis": [{"eps": list(e), "tensor": _basis_text(datum, word, e)} for e in labels]}
    lines = [f"B{_wlabel(word)} free of rank {len(labels)}"]
    lines += [f"  {_eps_label(e)} = {_basis_text(datum, word, e)}" for e in labels]
    return lines, doc


def cmd_bs_rightmul(datum, args, cfg):
    word = _word(args.seq, "--seq")
    r = _poly(datum, args.poly)
    mat = bimodule.right_mul_matrix(datum, word, r)
    labels = bimodule.basis_labels(word)
    names = [_eps_label(e) for e in labels]
    lines = []
    for j, e in enumerate(labels):
        column = [mat[i][j] for i in range(len(labels))]
        lines.append(f"{names[j]} * ({format_poly(r)}) = {_combination(column, names)}")
    doc = {"seq": [s + 1 for s in word], "poly": r.to_json(),
           "matrix": [[a.to_json() for a in row] for row in mat]}
    return lines, doc


def cmd_bs_generators(datum, args, cfg):
    s = int(args.s) - 1
    lines, doc = [], {}
    for name in ("unit", "counit", "mult", "comult"):
        m = bimodule.GENERATORS[name](datum, s)
        ok = bimodule.is_bimodule_map(datum, m)
        lines.append(f"{name}: {_wlabel(m.source)} -> {_wlabel(m.target)}  bimodule map: {'yes' if ok else 'no'}")
        lines += _matrix_text(m)
        doc[name] = m.to_json()
    return lines, doc


def cmd_hom_predict(datum, args, cfg):
    x, y = _word(args.seq_x, "--seq-x"), _word(args.seq_y, "--seq-y")
    n = homspace.hom_rank_predicted(datum, x, y)
    mult = {}
    for key, w in (("x", x), ("y", y)):
        counts = homspace.subsequence_products(datum, w)
        mult[key] = {el.label(): c for el, c in sorted(counts.items(), key=lambda kv: (kv[0].length, kv[0].word))}
    doc = {"x": [s + 1 for s in x], "y": [s + 1 for s in y], "predicted": n,
           "multiplicities": mult}
    return [f"predicted {n}"], doc


def cmd_hom_verify(datum, args, cfg):
    x, y = _word(args.seq_x, "--seq-x"), _word(args.seq_y, "--seq-y")
    report = homspace.hom_rank_specialized(datum, x, y, seed=cfg.seed, trials=args.trials,
                                           budget=cfg.budget)
    lines = [f"x: {_wlabel(x)}  y: {_wlabel(y)}", f"predicted {report.predicted}"]
    lines += [f"trial seed {s}: nullity {n}" for s, n in report.computed]
    lines.append(f"agreed: {'yes' if report.agreed else 'no'}")
    return lines, report.to_json()


def cmd_hom_twisted(datum, args, cfg):
    w = datum.element(_word(args.w, "--w"))
    n = homspace.hom_to_twisted_rank(datum, w, seed=cfg.seed)
    return [f"rank {n}"], {"w": [s + 1 for s in w.word], "rank": n}


# --------------------------------------------------------------------------
# Parser
# --------------------------------------------------------------------------

def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--type", dest="datum", default=None, help="Cartan type, e.g. A2, B2, A1xA1")
    p.add_argument("--cartan", dest="cartan_file", default=None, help="JSON root-datum file")
    p.add_argument("--output", choices=("text", "json"), default="text")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--budget", type=int, default=homspace.DEFAULT_BUDGET)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ksbim", description="K-theory Soergel bimodule computations")
    sub = parser.add_subparsers(dest="command", required=True)

    rd = sub.add_parser("rootdatum").add_subparsers(dest="action", required=True)
    p = rd.add_parser("info")
    _common(p)
    p.set_defaults(func=cmd_rootdatum_info)

    p = sub.add_parser("demazure")
    _common(p)
    p.add_argument("--word", required=True)
    p.add_argument("--monomial", required=True)
    p.set_defaults(func=cmd_demazure)

    p = sub.add_parser("character")
    _common(p)
    p.add_argument("--highest-weight", required=True)
    p.set_defaults(func=cmd_character)

    p = sub.add_parser("induction")
    _common(p)
    p.add_argument("--poly", required=True)
    p.add_argument("--method", choices=("demazure", "weyl-formula"), default="demazure")
    p.set_defaults(func=cmd_induction)

    p = sub.add_parser("steinberg")
    _common(p)
    p.set_defaults(func=cmd_steinberg)

    bs = sub.add_parser("bs").add_subparsers(dest="action", required=True)
    p = bs.add_parser("basis")
    _common(p)
    p.add_argument("--seq", required=True)
    p.set_defaults(func=cmd_bs_basis)
    p = bs.add_parser("rightmul")
    _common(p)
    p.add_argument("--seq", required=True)
    p.add_argument("--poly", required=True)
    p.set_defaults(func=cmd_bs_rightmul)
    p = bs.add_parser("generators")
    _common(p)
    p.add_argument("--s", required=True, type=int)
    p.set_defaults(func=cmd_bs_generators)

    hom = sub.add_parser("hom").add_subparsers(dest="action", required=True)
    p = hom.add_parser("predict")
    _common(p)
    p.add_argument("--seq-x", required=True)
    p.add_argument("--seq-y", required=True)
    p.set_defaults(func=cmd_hom_predict)
    p = hom.add_parser("verify")
    _common(p)
    p.add_argument("--seq-x", required=True)
    p.add_argument("--seq-y", required=True)
    p.add_argument("--trials", type=int, default=3)
    p.set_defaults(func=cmd_hom_verify)
    p = hom.add_parser("twisted")
    _common(p)
    p.add_argument("--w", required=True)
    p.set_defaults(func=cmd_hom_twisted)
    return parser


def _config(args, parser) -> CliConfig:
    if args.datum and args.cartan_file:
        parser.error("give either --type or --cartan, not both")
    spec = args.datum or (f"@{args.cartan_file}" if args.cartan_file else None)
    if spec is None:
        parser.error("a root datum is required (--type or --cartan)")
    if args.budget < 0:
        parser.error("--budget must be non-negative")
    seed = args.seed
    if seed is None:
        env = os.environ.get("KSBIM_SEED")
        try:
            seed = int(env) if env else 0
        except ValueError:
            parser.error(f"KSBIM_SEED must be an integer, got {env!r}")
    return CliConfig(spec, args.output, seed, args.budget)


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = _config(args, parser)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        datum = _load_datum(cfg)
        lines, doc = args.func(datum, args, cfg)
    except UsageError as exc:
        print(f"ksbim: error: {exc}", file=stderr)
        return 2
    except KSBimError as exc:
        print(f"error: {exc.code}: {exc}", file=stderr)
        return 1
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: cli.InputError: {exc}", file=stderr)
        return 1
    if cfg.output == "json":
        out = json.dumps(doc, indent=2) + "\n"
    else:
        out = "\n".join(lines) + "\n"
    stdout.write(out)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
