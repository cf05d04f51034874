import argparse
import logging
import sys
from typing import List, Optional

from pydantic import TypeAdapter, ValidationError

import config
import schemas
from document_generator.fan_drawing import fan_to_svg
from document_generator.flip_graph_dot import flip_graph_to_dot
from document_generator.report_generator import default_report_path
from parser.gale_parser import GaleParser
from pipeline.verification.fuzz import fuzz
from pipeline.verification.verification_pipeline import VerificationPipeline
from toric.errors import ToricError
from toric.geometry2d import chamber_complex
from toric.graver import graver_basis
from toric.groebner import groebner_fan
from toric.hilbert_scheme import (coherence_witness, flip_graph, flips, special_simplex,
                                  tangent_dimension)
from toric.ideals import localize, minimal_primes, radical
from toric.intlinalg import saturation_index

logger = logging.getLogger("main")

COMMANDS = ["normalize", "graver", "chambers", "fan", "ideals", "flips", "tangent", "verify", "fuzz"]


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="toric-hilbert",
        description="Monomial ideals, flips and Groebner fans of rank two lattice ideals.",
    )
    ap.add_argument("-v", "--verbose", action="store_true", help="Debug logging on stderr")
    sub = ap.add_subparsers(dest="command", required=True)

    for name in COMMANDS[:-1]:
        p = sub.add_parser(name)
        p.add_argument("input", help='JSON file {"name": ..., "basis": [[a, b], ...]}')
        p.add_argument("-o", "--output", default=None, help="Write data here instead of stdout")
        p.add_argument("--jobs", type=int, default=config.JOBS, help="Worker threads")
        p.add_argument("--cap", dest="search_cap", type=int, default=config.SEARCH_CAP,
                       help="Radius cap of the standard monomial search")
        if name == "fan":
            p.add_argument("--format", choices=["json", "svg"], default="json")
        if name == "flips":
            p.add_argument("--dot", action="store_true", help="Emit the flip graph as Graphviz DOT")
        if name == "ideals":
            p.add_argument("--lift", action="store_true",
                           help="Report generators in the variables of the original input")
        if name == "verify":
            p.add_argument("--degree-bound", type=int, default=config.DEGREE_BOUND)
            p.add_argument("--margin", type=int, default=config.MARGIN)
            p.add_argument("--pdf", nargs="?", const="", default=None,
                           help="Also render the report as a PDF, under the reports directory if no path is given")
            p.add_argument("--checks", default=None, help="Comma separated check ids")
            p.add_argument("--seed", type=int, default=0, help="Seed of the random weights")

    p = sub.add_parser("fuzz")
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--jobs", type=int, default=config.JOBS)
    return ap


def _emit(text: str, output: Optional[str]):
    if output:
        with open(output, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _dump(model_type, value) -> str:
    return TypeAdapter(model_type).dump_json(value, indent=2, by_alias=True).decode()


def _verify_options(cfg: schemas.RunConfig) -> schemas.VerifyOptions:
    return schemas.VerifyOptions(
        degree_bound=cfg.degree_bound,
        margin=cfg.margin,
        search_cap=cfg.search_cap,
        jobs=cfg.jobs,
        oracle_max_graver=config.ORACLE_MAX_GRAVER,
        oracle_max_monomials=config.ORACLE_MAX_MONOMIALS,
        random_weights=config.RANDOM_WEIGHTS,
        seed=cfg.seed,
        checks=cfg.checks,
    )


def _flip_out(f) -> schemas.FlipOut:
    return schemas.FlipOut(
        binomial=schemas.BinomialOut.from_binomial(f.binomial),
        kind=schemas.FlipKind(f.kind),
        target=schemas.ideal_out(f.target) if f.target else None,
    )


def execute(cfg: schemas.RunConfig) -> int:
    if cfg.command == "fuzz":
        reports = fuzz(cfg.seed, cfg.count, _verify_options(cfg))
        _emit(_dump(List[schemas.VerificationReport], reports), cfg.output)
        return 0 if all(r.overall for r in reports) else 1

    L, log = GaleParser.parse_input(cfg.input)

    if cfg.command == "normalize":
        out = schemas.NormalizationOut(
            name=L.name,
            basis=[list(r) for r in L.rows],
            dropped_zero=[i + 1 for i in log.dropped_zero],
            merges=[schemas.MergeOut(dropped=m.dropped + 1, kept=m.kept + 1, factor=m.factor) for m in log.merges],
            saturation_index=saturation_index(L),
        )
        _emit(out.model_dump_json(indent=2), cfg.output)
        return 0

    if cfg.command == "chambers":
        cc = chamber_complex(L)
        out = schemas.ChambersOut(
            support=schemas.SupportType(cc.support),
            rays=[list(r.dir) for r in cc.rays],
            chambers=[schemas.ChamberOut(rays=[list(d) for d in ch.cone.rays], pair=[i + 1 for i in ch.pair])
                      for ch in cc.chambers],
        )
        _emit(out.model_dump_json(indent=2), cfg.output)
        return 0

    Gr = graver_basis(L)
    if cfg.command == "graver":
        _emit(_dump(List[schemas.BinomialOut], [schemas.BinomialOut.from_binomial(b) for b in Gr]), cfg.output)
        return 0

    if cfg.command == "verify":
        pdf = default_report_path(config.REPORTS_DIR, L.name) if cfg.pdf == "" else cfg.pdf
        pipeline = VerificationPipeline(L, _verify_options(cfg))
        report = pipeline.process(cfg.checks, pdf)
        if report is None:
            return 1
        _emit(report.model_dump_json(indent=2, by_alias=True), cfg.output)
        return 0 if report.overall else 1

    fan = groebner_fan(L, Gr, jobs=cfg.jobs)
    if cfg.command == "fan":
        text = fan_to_svg(fan) if cfg.format == schemas.OutputFormat.SVG else \
            schemas.FanOut.from_fan(fan).model_dump_json(indent=2)
        _emit(text, cfg.output)
        return 0

    if cfg.command == "ideals":
        items = []
        for k, I in enumerate(fan.ideals):
            sigma, i, j = special_simplex(I, L)
            gens = I.sorted_gens
            if cfg.lift:
                gens = sorted(log.lift_exponents(g) for g in gens)
            items.append(schemas.IdealOut(
                generators=[list(g) for g in gens],
                radical=schemas.ideal_out(radical(I)),
                minimal_primes=sorted([x + 1 for x in sorted(s)] for s in minimal_primes(I)),
                cone=[list(d) for d in fan.cone(k).rays],
                chamber=[i + 1, j + 1],
                special_simplex=[x + 1 for x in sorted(sigma)],
                special_localization=schemas.ideal_out(localize(I, sigma)),
                witness=list(coherence_witness(I, L, Gr)),
            ))
        _emit(_dump(List[schemas.IdealOut], items), cfg.output)
        return 0

    if cfg.command == "flips":
        if cfg.dot:
            _emit(flip_graph_to_dot(flip_graph(L, Gr, fan), L.name or "flips"), cfg.output)
            return 0
        items = [
            schemas.IdealFlipsOut(ideal=schemas.ideal_out(I),
                                  flips=[_flip_out(f) for f in flips(I, L, Gr, fan, cfg.search_cap)])
            for I in fan.ideals
        ]
        _emit(_dump(List[schemas.IdealFlipsOut], items), cfg.output)
        return 0

    if cfg.command == "tangent":
        items = [
            schemas.TangentOut(ideal=schemas.ideal_out(I),
                               dimension=tangent_dimension(I, L, Gr, cfg.search_cap),
                               flips=len(flips(I, L, Gr, fan, cfg.search_cap)))
            for I in fan.ideals
        ]
        _emit(_dump(List[schemas.TangentOut], items), cfg.output)
        return 0

    raise ValueError(f"unknown command {cfg.command}")


def run(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )

    try:
        values = {k: v for k, v in vars(args).items() if v is not None}
        if "checks" in values:
            values["checks"] = [c.strip() for c in values["checks"].split(",") if c.strip()]
        cfg = schemas.RunConfig(**values)
    except ValidationError as e:
        logger.error(f"invalid options: {e.errors()[0]['msg']}")
        return 2

    try:
        return execute(cfg)
    except ToricError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return e.exit_code


if __name__ == "__main__":
    sys.exit(run())
