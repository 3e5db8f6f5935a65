"""
Command-line frontend.

    koszulkit <dual|check|tor|pi|loop|series|rational-form> [--input FILE | shorthand] ...
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional, Sequence, Tuple, Union

from dotenv import load_dotenv
from pydantic import BaseModel, Field, ValidationError, model_validator

from koszulkit import __version__
from koszulkit.config import Settings, configure_logging, get_settings
from koszulkit.exceptions import InputError, KoszulkitError
from koszulkit.graded import TruncationBounds
from koszulkit.koszul import (
    NotKoszul,
    bar_tor_dims,
    dual_comm,
    dual_lie,
    koszul_check,
    koszul_complex_check,
)
from koszulkit.presentations import (
    QuadraticCommPresentation,
    comm_algebra_dims,
    finite_algebra_series,
    lie_algebra_dims,
)
from koszulkit.schemas import AlgebraSpec, LieSpec, OutputTable
from koszulkit.series import dims_to_series, koszul_inversion, rational_closed_form
from koszulkit.spaces import (
    ConfigurationSpace,
    Presented,
    Product,
    SpaceDescriptor,
    Sphere,
    Suspension,
    Wedge,
    cohomology_presentation,
    homotopy_lie,
    loop_homology,
)
from koszulkit.utils.formatting import format_polynomial, render_tsv

logger = logging.getLogger(__name__)

COMMANDS = ("dual", "check", "tor", "pi", "loop", "series", "rational-form")


class InputDocument(BaseModel):
    algebra: Optional[AlgebraSpec] = None
    lie: Optional[LieSpec] = None
    space: Optional[SpaceDescriptor] = None
    bounds: Optional[TruncationBounds] = None

    @model_validator(mode="after")
    def exactly_one_source(self) -> "InputDocument":
        given = [k for k in ("algebra", "lie", "space") if getattr(self, k) is not None]
        if len(given) != 1:
            raise ValueError("document needs exactly one of 'algebra', 'lie' or 'space'")
        return self

    def space_descriptor(self):
        if self.lie is not None:
            raise InputError("this command needs an 'algebra' or 'space' input, got 'lie'")
        if self.algebra is not None:
            return Presented(algebra=self.algebra)
        return self.space

    def presentation(self) -> QuadraticCommPresentation:
        return cohomology_presentation(self.space_descriptor())


class RunFlags(BaseModel):
    n: int = 1
    jobs: int = Field(default=1, ge=1)
    index: str = "loop"
    koszul_complex: bool = False
    verify_weight: int = 0
    check_differentials: bool = True


def _validation_message(error: ValidationError) -> str:
    first = error.errors()[0]
    location = ".".join(str(part) for part in first["loc"]) or "document"
    return f"{location}: {first['msg']}"


def parse_input(source: Union[str, Path]) -> InputDocument:
    """Validate an input document given as a file path or as JSON text"""
    text = str(source)
    if isinstance(source, Path) or not text.lstrip().startswith("{"):
        try:
            text = Path(source).read_text(encoding="utf-8")
        except OSError as e:
            raise InputError(f"cannot read input {source}: {e.strerror or e}") from e
    try:
        document = InputDocument.model_validate_json(text)
    except ValidationError as e:
        raise InputError(_validation_message(e)) from e
    # presentation-level rules: unknown names, homogeneity, odd squares
    if document.algebra is not None:
        document.algebra.to_presentation()
    if document.lie is not None:
        document.lie.to_presentation()
    return document


def _dims_rows(dims) -> List[List[int]]:
    return [[w, d, dim] for (w, d), dim in dims.items()]


def run_command(
    command: str, document: InputDocument, bounds: TruncationBounds, flags: RunFlags
) -> Tuple[OutputTable, int]:
    """Dispatch one command; returns the table and the exit code"""
    logger.info(f"Running {command} with bounds ({bounds.max_weight}, {bounds.max_degree})")
    base = dict(command=command, bounds=bounds)

    if command == "dual":
        if document.lie is not None:
            algebra = dual_comm(document.lie.to_presentation())
            return (
                OutputTable(
                    **base,
                    columns=["weight", "degree", "dimension"],
                    rows=_dims_rows(comm_algebra_dims(algebra, bounds)),
                    metadata={"relation_dims": algebra.relation_dims()},
                    algebra=AlgebraSpec.from_presentation(algebra),
                ),
                0,
            )
        lie = dual_lie(document.presentation())
        return (
            OutputTable(
                **base,
                columns=["weight", "degree", "dimension"],
                rows=_dims_rows(lie_algebra_dims(lie, bounds)),
                metadata={
                    "relation_dims": lie.relation_dims(),
                    "self_bracket_slot": "half",
                },
                lie=LieSpec.from_presentation(lie),
            ),
            0,
        )

    if command == "check":
        presentation = document.presentation()
        if flags.koszul_complex:
            result = koszul_complex_check(
                presentation, bounds, jobs=flags.jobs, check_differentials=flags.check_differentials
            )
            metadata = {"checker": "koszul-complex", "acyclic": result.acyclic}
            rows = []
            if result.witness is not None:
                metadata["witness"] = result.witness._asdict()
                rows = [[result.witness.weight, result.witness.degree, result.witness.dimension]]
            table = OutputTable(**base, columns=["weight", "degree", "dimension"], rows=rows, metadata=metadata)
            return table, 0 if result.acyclic else 1
        verdict = koszul_check(
            presentation, bounds, jobs=flags.jobs, check_differentials=flags.check_differentials
        )
        metadata = {"checker": "bar", "verdict": type(verdict).__name__}
        rows = []
        if isinstance(verdict, NotKoszul):
            metadata["witness"] = verdict.witness._asdict()
            w = verdict.witness
            rows = [[w.s, w.weight, w.degree, w.dimension]]
        table = OutputTable(**base, columns=["s", "weight", "degree", "dimension"], rows=rows, metadata=metadata)
        return table, 1 if isinstance(verdict, NotKoszul) else 0

    if command == "tor":
        table = bar_tor_dims(
            document.presentation(), bounds, jobs=flags.jobs, check_differentials=flags.check_differentials
        )
        return (
            OutputTable(
                **base,
                columns=["s", "weight", "degree", "dimension"],
                rows=[list(row) for row in table.rows()],
            ),
            0,
        )

    if command == "pi":
        lie, dims = homotopy_lie(
            document.space_descriptor(), bounds, verify_weight=flags.verify_weight, jobs=flags.jobs
        )
        shift = 1 if flags.index == "space" else 0
        return (
            OutputTable(
                **base,
                columns=["weight", "pi_degree" if shift else "degree", "dimension"],
                rows=[[w, d + shift, dim] for (w, d), dim in dims.items()],
                metadata={
                    "index": flags.index,
                    "generators": len(lie.generators),
                    "relations": len(lie.relations),
                },
            ),
            0,
        )

    if command == "loop":
        dims = loop_homology(
            document.space_descriptor(), flags.n, bounds, verify_weight=flags.verify_weight, jobs=flags.jobs
        )
        return (
            OutputTable(
                **base,
                columns=["weight", "degree", "dimension"],
                rows=_dims_rows(dims),
                metadata={"n": flags.n},
            ),
            0,
        )

    if command == "series":
        algebra_series = dims_to_series(comm_algebra_dims(document.presentation(), bounds))
        dual = koszul_inversion(algebra_series, bounds)
        return (
            OutputTable(
                **base,
                columns=["weight", "degree", "coefficient"],
                rows=[[w, d, c] for (w, d), c in dual.items()],
                metadata={"algebra_series": [[w, d, c] for (w, d), c in algebra_series.items()]},
            ),
            0,
        )

    if command == "rational-form":
        form = rational_closed_form(finite_algebra_series(document.presentation(), bounds.max_weight))
        return (
            OutputTable(
                **base,
                columns=["degree", "coefficient"],
                rows=[[d, c] for d, c in sorted(form.expand(bounds.max_degree).items())],
                metadata={
                    "numerator": format_polynomial(form.numerator),
                    "denominator": format_polynomial(form.denominator),
                    "closed_form": form.render(factored=True),
                },
            ),
            0,
        )

    raise InputError(f"unknown command '{command}'")


def _int_list(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got '{text}'")


def _shorthand(args: argparse.Namespace):
    if args.sphere is not None:
        return Sphere(n=args.sphere)
    if args.config is not None:
        return ConfigurationSpace(n=args.config[0], k=args.config[1])
    if args.suspension is not None:
        homology = {}
        for q in args.suspension:
            homology[q] = homology.get(q, 0) + 1
        return Suspension(reduced_homology=homology, times=args.times)
    if args.product_spheres is not None:
        return Product(factors=[Sphere(n=n) for n in args.product_spheres])
    if args.wedge_spheres is not None:
        return Wedge(factors=[Sphere(n=n) for n in args.wedge_spheres])
    return None


def build_parser(settings: Settings) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="koszulkit",
        description="Koszul duality for quadratic algebras and rational homotopy of Koszul spaces",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("command", choices=COMMANDS)
    source = parser.add_mutually_exclusive_group()
    source.add_argument("--input", "-i", help="JSON input document")
    source.add_argument("--sphere", type=int, metavar="N")
    source.add_argument("--config", type=int, nargs=2, metavar=("N", "K"))
    source.add_argument("--suspension", type=_int_list, metavar="DEG[,DEG...]")
    source.add_argument("--product-spheres", type=_int_list, metavar="A,B")
    source.add_argument("--wedge-spheres", type=_int_list, metavar="A,B")
    parser.add_argument("--times", type=int, default=1, help="suspension count for --suspension")
    parser.add_argument("--n", type=int, default=1, help="loop order for 'loop'")
    parser.add_argument("--max-weight", type=int, default=None)
    parser.add_argument("--max-degree", type=int, default=None)
    parser.add_argument("--format", choices=("json", "tsv"), default=settings.output_format)
    parser.add_argument("--jobs", type=int, default=settings.jobs)
    parser.add_argument("--index", choices=("loop", "space"), default=settings.pi_index)
    parser.add_argument("--koszul-complex", action="store_true", help="'check' via the Koszul complex")
    parser.add_argument("--verify-weight", type=int, default=settings.verify_weight)
    parser.add_argument("--log-level", default=settings.log_level)
    parser.add_argument("-v", "--verbose", action="store_true", help="shorthand for --log-level INFO")
    return parser


def _emit_error(error: KoszulkitError) -> int:
    message = " ".join(str(error).split())
    print(f"koszulkit: error[{error.code}]: {message}", file=sys.stderr)
    return 2


def main(argv: Optional[Sequence[str]] = None) -> int:
    load_dotenv()
    try:
        settings = get_settings()
    except KoszulkitError as e:
        return _emit_error(e)

    args = build_parser(settings).parse_args(argv)
    try:
        configure_logging("INFO" if args.verbose else args.log_level)
    except ValueError:
        return _emit_error(InputError(f"unknown log level '{args.log_level}'"))

    try:
        shorthand = _shorthand(args)
        if args.input:
            document = parse_input(Path(args.input))
        elif shorthand is not None:
            document = InputDocument(space=shorthand)
        else:
            raise InputError("no input: give --input FILE or a shorthand such as --sphere N")

        base = document.bounds or TruncationBounds.default()
        bounds = TruncationBounds(
            max_weight=base.max_weight if args.max_weight is None else args.max_weight,
            max_degree=base.max_degree if args.max_degree is None else args.max_degree,
        )
        flags = RunFlags(
            n=args.n,
            jobs=args.jobs,
            index=args.index,
            koszul_complex=args.koszul_complex,
            verify_weight=args.verify_weight,
            check_differentials=settings.assert_differentials,
        )
        table, code = run_command(args.command, document, bounds, flags)
    except KoszulkitError as e:
        return _emit_error(e)
    except ValidationError as e:
        return _emit_error(InputError(_validation_message(e)))

    if args.format == "tsv":
        sys.stdout.write(render_tsv(table.columns, table.rows))
    else:
        sys.stdout.write(table.model_dump_json(indent=2, exclude_none=True) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
