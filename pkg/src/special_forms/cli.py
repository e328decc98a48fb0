"""
Command-line interface for the special forms toolkit.

Forms are read and written in the text format of special_forms.formio. Every
command prints to stdout; logs go to stderr so outputs stay deterministic.

Usage:
    python -m special_forms.cli catalog
    python -m special_forms.cli catalog omega10 --zero-ten
    python -m special_forms.cli symmetries fixtures/g2.form --orthogonal --commutator
    python -m special_forms.cli charpoly fixtures/omega10.form --k 3
    python -m special_forms.cli construct --scheme Z5 fixtures/spin7.form
    python -m special_forms.cli verify-paper --section 5 --json
    python -m special_forms.cli symmetries @omega10 --orthogonal --max-group-order 50000

The search bounds of the active profile can be overridden per run with
--max-dimension, --max-group-order, --materialize-limit,
--canonical-node-limit and --max-matrix-size.

Exit codes:
    0  success (every claim passes or is a documented discrepancy)
    1  a verification claim failed, or slow claims were skipped
    2  parse or usage error
    3  a search bound was exceeded
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from .canonical import find_equivalence
from .config_loader import (
    PAPER_SECTIONS,
    VERIFICATION_SECTIONS,
    FormsConfig,
    SearchConfig,
    SpectralConfig,
    available_profiles,
    load_config,
)
from .construct import (
    FIXTURE_NAMES,
    EmbeddingSpec,
    NAMED_GENERATORS,
    catalog,
    catalog_names,
    extend,
    named_generators,
    omega10_spec,
    psi12_spec,
)
from .errors import CatalogError, FormParseError, SearchBoundError, SpecialFormsError
from .exterior import SpecialForm, contract_plane, hodge_star, restrict, wedge
from .formio import format_form, load_form, save_form
from .invariants import classify_2form_4d, invariant_I1, invariant_I2, render_profile, valence_profile
from .spectral import (
    KNOWN_POLYNOMIALS,
    char_poly,
    endomorphism_matrix,
    format_factored,
    known_factors,
    verify_factorization,
)
from .symmetry import (
    SignedPermutation,
    commutator_subgroup,
    democracy,
    expand_presentation,
    small_generating_set,
    symmetry_census,
)
from .telemetry import init_telemetry
from .verify import FAIL, SKIPPED, ClaimVerifier

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_SEARCH_BOUND = 3

SCHEMES = ("A", "B", "C", "Z5", "Z6")

# flag -> (config section, field)
FLAG_OVERRIDES = {
    "max_dimension": ("search", "max_dimension"),
    "max_group_order": ("search", "max_group_order"),
    "materialize_limit": ("search", "materialize_limit"),
    "canonical_node_limit": ("search", "canonical_node_limit"),
    "max_matrix_size": ("spectral", "max_matrix_size"),
}


class UsageError(SpecialFormsError):
    """Bad combination of command-line arguments."""


# ============================================================================
# Helpers
# ============================================================================

def _emit(text: str, output: Optional[str] = None) -> None:
    if output:
        Path(output).write_text(text if text.endswith("\n") else text + "\n", encoding="utf-8")
        logger.info(f"Wrote {output}")
    else:
        print(text.rstrip("\n"))


def _emit_form(f: SpecialForm, args: argparse.Namespace, comment: Optional[str] = None) -> None:
    if getattr(args, "output", None):
        save_form(f, args.output, zero_ten=args.zero_ten, comment=comment)
    else:
        print(format_form(f, zero_ten=args.zero_ten, comment=comment).rstrip("\n"))


def _load(path: str, args: argparse.Namespace) -> SpecialForm:
    """A form file, or a catalog name prefixed with '@' (e.g. @g2)."""
    if path.startswith("@"):
        return catalog(path[1:])
    return load_form(path, zero_ten=args.zero_ten)


def _parse_generators(texts: Sequence[str], dim: int) -> List[SignedPermutation]:
    gens = []
    for text in texts:
        if text in NAMED_GENERATORS:
            gens.extend(named_generators(text))
        else:
            gens.append(SignedPermutation.parse(text, dim))
    return gens


def _int_list(text: Optional[str]) -> List[int]:
    if not text:
        return []
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"Expected a list of integers, got '{text}'")


def _json(data: Any) -> str:
    return json.dumps(data, indent=2, sort_keys=True)


def apply_flag_overrides(config: FormsConfig, args: argparse.Namespace) -> FormsConfig:
    """
    Replace search and spectral bounds given on the command line.

    Raises:
        ValueError: If an overridden section fails validation
    """
    updates: Dict[str, Dict[str, int]] = {}
    for flag, (section, key) in FLAG_OVERRIDES.items():
        value = getattr(args, flag, None)
        if value is not None:
            updates.setdefault(section, {})[key] = value
    if "search" in updates:
        config.search = SearchConfig(**{**config.search.model_dump(), **updates["search"]})
    if "spectral" in updates:
        config.spectral = SpectralConfig(**{**config.spectral.model_dump(), **updates["spectral"]})
    if updates:
        logger.debug(f"Command-line bounds: {updates}")
    return config


# ============================================================================
# Commands
# ============================================================================

def cmd_catalog(args: argparse.Namespace, config: FormsConfig) -> int:
    if not args.name:
        for name in catalog_names():
            print(name)
        return EXIT_OK
    f = catalog(args.name)
    _emit_form(f, args, comment=args.name)
    return EXIT_OK


def cmd_fixtures(args: argparse.Namespace, config: FormsConfig) -> int:
    directory = Path(args.directory)
    for name in args.names or FIXTURE_NAMES:
        f = catalog(name)
        filename = name.replace(":", "") + ".form"
        save_form(f, directory / filename, zero_ten=(f.dim == 10), comment=name)
        print(f"{filename}: {f.weight} components")
    return EXIT_OK


def cmd_symmetries(args: argparse.Namespace, config: FormsConfig) -> int:
    f = _load(args.form, args)
    census = symmetry_census(f, orthogonal=args.orthogonal, config=config.search)
    report: Dict[str, Any] = {"dim": f.dim, "degree": f.degree, "weight": f.weight}
    report.update(census.to_dict())

    if args.commutator:
        perm_gens = census.permutation.generators()
        report["permutation"]["commutator_order"] = (
            len(commutator_subgroup(perm_gens, config.search.max_group_order)) if perm_gens else 1
        )
        orth = census.orthogonal
        if orth is not None and orth.materialized and orth.symmetries:
            gens = small_generating_set(orth.symmetries)
            report["orthogonal"]["commutator_order"] = len(
                commutator_subgroup(gens, config.search.max_group_order)
            )
        if orth is not None:
            report["orthogonal"]["projection_commutator_order"] = len(
                orth.projection_commutator(config.search.max_group_order)
            )
    if args.democracy:
        report["democracy"] = democracy(f, census, config.search)

    if args.json:
        _emit(_json(report))
        return EXIT_OK

    perm = report["permutation"]
    lines = [
        f"form: {f.weight} components, degree {f.degree}, d={f.dim}",
        f"permutation symmetries: {perm['symmetry_order']}",
        f"permutation antisymmetries: {perm['antisymmetry_count']}",
        f"generators: {' '.join(perm['generators']) or '()'}",
        "cycle types: " + ", ".join(f"{n} x {t}" for t, n in perm["cycle_types"].items()),
    ]
    if "commutator_order" in perm:
        lines.append(f"permutation commutator order: {perm['commutator_order']}")
    if "orthogonal" in report:
        orth = report["orthogonal"]
        lines.append(
            f"orthogonal symmetries: {orth['symmetries_full']} "
            f"(projective {orth['symmetries_projective']})"
        )
        lines.append(
            f"orthogonal antisymmetries: {orth['antisymmetries_full']} "
            f"(projective {orth['antisymmetries_projective']})"
        )
        if "commutator_order" in orth:
            lines.append(f"orthogonal commutator order: {orth['commutator_order']}")
        if "projection_commutator_order" in orth:
            lines.append(f"commutator order of the sigma-parts: {orth['projection_commutator_order']}")
    if args.democracy:
        lines.append(f"democratic: {report['democracy'] or 'no'}")
    _emit("\n".join(lines))
    return EXIT_OK


def _matching_known(f: SpecialForm, k: int) -> Optional[str]:
    for name, (known_k, _) in KNOWN_POLYNOMIALS.items():
        if known_k != k or (name.startswith("psi12") and f.dim != 12):
            continue
        try:
            candidate = catalog(name)
        except CatalogError:
            continue
        if candidate == f:
            return name
    return None


def cmd_charpoly(args: argparse.Namespace, config: FormsConfig) -> int:
    f = _load(args.form, args)
    k = args.k if args.k is not None else f.degree // 2
    M = endomorphism_matrix(f, k, config.spectral, label=args.form)
    poly = char_poly(M)

    name = _matching_known(f, k)
    if name:
        _, factors = known_factors(name)
        if verify_factorization(poly, factors):
            text = format_factored(factors)
        else:
            logger.warning(f"Stored factorization of {name} does not match; factoring directly")
            name = None
    if not name:
        coeff, parts = poly.to_poly().factor_list()
        text = " ".join(
            f"({p.as_expr()})" if m == 1 else f"({p.as_expr()})^{m}" for p, m in parts
        )
        if coeff != 1:
            text = f"{coeff} {text}"

    if args.json:
        _emit(_json({
            "k": k,
            "size": M.size,
            "symmetric": M.is_symmetric,
            "antisymmetric": M.is_antisymmetric,
            "coefficients": list(poly.coefficients),
            "factored": text,
            "known": name,
        }))
    else:
        _emit(text)
    return EXIT_OK


def _spec_from_args(args: argparse.Namespace, source: SpecialForm) -> Optional[EmbeddingSpec]:
    if args.spec:
        data = json.loads(Path(args.spec).read_text(encoding="utf-8"))
        target_dim = int(data.get("target_dim", source.dim))
        appended = [int(s) for s in data.get("appended", [])]
        generators = _parse_generators(data.get("generators", []), target_dim)
    else:
        target_dim = args.dim or source.dim
        appended = _int_list(args.slots)
        generators = _parse_generators(args.generators or [], target_dim)
    if not generators:
        raise UsageError("construct needs generators (--generators, or a spec file)")
    return EmbeddingSpec.for_form(source, target_dim, appended, generators)


def cmd_construct(args: argparse.Namespace, config: FormsConfig) -> int:
    source = _load(args.source, args)

    if args.scheme == "Z5":
        result = extend(source, omega10_spec(), config.search)
    elif args.scheme == "Z6":
        result = extend(source, psi12_spec(), config.search)
    else:
        spec = _spec_from_args(args, source)
        if args.scheme == "A":
            if spec.target_dim != source.dim or spec.appended:
                raise UsageError("scheme A is a presentation: same dimension, no slots")
            result = expand_presentation(
                list(source.items()), spec.generators, dim=source.dim,
                max_order=config.search.max_group_order,
            )
        elif args.scheme == "B":
            if spec.appended:
                raise UsageError("scheme B embeds without slots; use scheme C for --slots")
            result = extend(source, spec, config.search)
        else:
            if not spec.appended:
                raise UsageError("scheme C needs appended slots")
            result = extend(source, spec, config.search)

    logger.info(f"Scheme {args.scheme}: {source.weight} -> {result.weight} components")
    _emit_form(result, args)
    return EXIT_OK


def cmd_contract(args: argparse.Namespace, config: FormsConfig) -> int:
    f = _load(args.form, args)
    _emit_form(contract_plane(f, args.i, args.j), args)
    return EXIT_OK


def cmd_hodge(args: argparse.Namespace, config: FormsConfig) -> int:
    f = _load(args.form, args)
    _emit_form(hodge_star(f, orientation=args.orientation), args)
    return EXIT_OK


def cmd_wedge(args: argparse.Namespace, config: FormsConfig) -> int:
    _emit_form(wedge(_load(args.first, args), _load(args.second, args)), args)
    return EXIT_OK


def cmd_restrict(args: argparse.Namespace, config: FormsConfig) -> int:
    f = _load(args.form, args)
    _emit_form(restrict(f, _int_list(args.indices)), args)
    return EXIT_OK


def cmd_invariants(args: argparse.Namespace, config: FormsConfig) -> int:
    f = _load(args.form, args)
    entry = classify_2form_4d(f)
    data = {
        "I1": invariant_I1(f),
        "I2": invariant_I2(f),
        "class": entry.label if entry else None,
    }
    if args.json:
        _emit(_json(data))
    else:
        _emit(f"I1 = {data['I1']}\nI2 = {data['I2']}\nclass: {data['class'] or 'none'}")
    return EXIT_OK


def cmd_graph(args: argparse.Namespace, config: FormsConfig) -> int:
    profile = valence_profile(_load(args.form, args))
    if args.json:
        _emit(_json([{"profile": {str(d): n for d, n in p.items()}, "vertices": c} for p, c in profile]))
    else:
        _emit(render_profile(profile))
    return EXIT_OK


def cmd_equivalent(args: argparse.Namespace, config: FormsConfig) -> int:
    g = find_equivalence(_load(args.first, args), _load(args.second, args), config.search)
    if g is None:
        _emit("not equivalent")
        return EXIT_VERIFICATION_FAILED
    _emit(f"equivalent via {g.cycle_notation()} eta={list(g.eta)}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, config: FormsConfig) -> int:
    if args.slow or "all" in (args.section or []):
        config.verification.include_slow = True
    verifier = ClaimVerifier(config)
    try:
        report = verifier.run(args.section or None)
    except ValueError as e:
        raise UsageError(str(e))

    if args.json:
        _emit(report.to_json(), args.output)
    else:
        _emit(report.render_text(), args.output)

    counts = report.counts()
    if report.overall_status == "pass":
        logger.info("Verification passed")
        return EXIT_OK
    if report.overall_status == "incomplete":
        logger.error(f"Verification incomplete: {counts[SKIPPED]} claims skipped")
    else:
        logger.error(f"Verification failed: {counts[FAIL]} claims failed")
    return EXIT_VERIFICATION_FAILED


# ============================================================================
# Parser
# ============================================================================

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--zero-ten", action="store_true", help="Read and write index 10 as 0")
    common.add_argument("--verbose", "-v", action="store_true", help="Enable verbose logging")
    common.add_argument("--profile", help=f"Configuration profile ({', '.join(available_profiles())})")
    bounds = common.add_argument_group("search bounds", "Override the bounds of the profile")
    for flag in FLAG_OVERRIDES:
        bounds.add_argument("--" + flag.replace("_", "-"), dest=flag, type=int, metavar="N")

    parser = argparse.ArgumentParser(
        prog="special-forms",
        description="Exact constructions, symmetries and spectra of special democratic forms",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Forms are files in the text format ('dim D', 'deg P', then '<coeff> <indices>'
lines) or catalog names prefixed with '@', e.g. @g2, @kahler:3.

Examples:
  special-forms catalog spin7 --output fixtures/spin7.form
  special-forms symmetries @g2 --orthogonal
  special-forms construct --scheme C @kahler:3 --dim 7 --slots 7 --generators H7_fix1
  special-forms verify-paper --section 5 --json
  special-forms charpoly @spin7 --max-matrix-size 100
        """,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", parents=[common], help="List catalog forms or print one")
    p.add_argument("name", nargs="?", help="Catalog name, e.g. g2, epsilon:4, kahler_power:3,2")
    p.add_argument("--output", "-o", help="Write the form to this file")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("fixtures", parents=[common], help="Write catalog forms as fixture files")
    p.add_argument("names", nargs="*", help=f"Catalog names (default: {', '.join(FIXTURE_NAMES)})")
    p.add_argument("--directory", default="fixtures", help="Target directory")
    p.set_defaults(func=cmd_fixtures)

    p = sub.add_parser("symmetries", parents=[common], help="Symmetry census of a form")
    p.add_argument("form")
    p.add_argument("--orthogonal", action="store_true", help="Include the signed-permutation census")
    p.add_argument("--commutator", action="store_true", help="Orders of the commutator subgroups")
    p.add_argument("--democracy", action="store_true", help="Test transitivity on the indices")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_symmetries)

    p = sub.add_parser("charpoly", parents=[common], help="Characteristic polynomial of the induced map")
    p.add_argument("form")
    p.add_argument("--k", type=int, help="Degree of the forms acted on (default: half the degree)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("construct", parents=[common], help="Build a form by presentation or embedding")
    p.add_argument("source")
    p.add_argument("--scheme", choices=SCHEMES, required=True,
                   help="A: presentation, B: embedding without slots, C: with slots, Z5/Z6: cyclic lifts")
    p.add_argument("--spec", help="JSON file with target_dim, appended, generators")
    p.add_argument("--dim", type=int, help="Target dimension")
    p.add_argument("--slots", help="Appended slot indices, e.g. '9 10'")
    p.add_argument("--generators", nargs="*", help="Cycle strings or named generator sets")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("contract", parents=[common], help="Contract with e_i ^ e_j")
    p.add_argument("form")
    p.add_argument("i", type=int)
    p.add_argument("j", type=int)
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_contract)

    p = sub.add_parser("hodge", parents=[common], help="Hodge dual")
    p.add_argument("form")
    p.add_argument("--orientation", type=int, choices=(1, -1), default=1)
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_hodge)

    p = sub.add_parser("wedge", parents=[common], help="Wedge product of two forms")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_wedge)

    p = sub.add_parser("restrict", parents=[common], help="Restrict to a subset of indices")
    p.add_argument("form")
    p.add_argument("indices", help="Kept indices, e.g. '1 2 3 4 5 6 7'")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_restrict)

    p = sub.add_parser("invariants", parents=[common], help="I1, I2 and class of a 2-form in d=4")
    p.add_argument("form")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("graph", parents=[common], help="Valence profile of the vertex graph")
    p.add_argument("form")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("equivalent", parents=[common], help="Find an O(d,Z) element mapping one form to another")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=cmd_equivalent)

    p = sub.add_parser("verify-paper", aliases=["verify"], parents=[common], help="Recompute the reference values")
    p.add_argument("--section", action="append", choices=("all",) + PAPER_SECTIONS + VERIFICATION_SECTIONS,
                   help="Numbered section or topic to verify (repeatable, default: from the profile); "
                        "'all' includes the slow claims")
    p.add_argument("--slow", action="store_true", help="Include slow claims")
    p.add_argument("--json", action="store_true", help="Emit the report as JSON")
    p.add_argument("--output", "-o", help="Write the report to this file")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Main entry point for the CLI.

    Returns:
        Exit code (0 success, 1 verification failure, 2 usage error, 3 search bound)
    """
    try:
        from dotenv import load_dotenv
        load_dotenv()
    except ImportError:
        pass

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )

    try:
        config = apply_flag_overrides(load_config(profile=args.profile), args)
    except (FileNotFoundError, ValueError) as e:
        logger.error(f"Configuration error: {e}")
        return EXIT_USAGE

    init_telemetry(config)

    try:
        return args.func(args, config)
    except SearchBoundError as e:
        logger.error(f"Search bound exceeded: {e}")
        return EXIT_SEARCH_BOUND
    except (FormParseError, UsageError, CatalogError, FileNotFoundError, json.JSONDecodeError) as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_USAGE
    except SpecialFormsError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
