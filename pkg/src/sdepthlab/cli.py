"""Command-line front end.

Subcommands: sdepth, quotient, sat, janet, alpha, conjecture, mki,
remark17, verify.  Human summaries go to stdout; structured documents go
to --out (and to stdout under --format structured).  Exit codes: 0 ok,
2 parse/input error, 3 timeout, 4 internal verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from . import ENGINE_VERSION
from .cache import ResultCache, content_key
from .formats import (
    IdealParseError,
    ideal_str,
    ideal_to_structured,
    monomial_str,
    parse_ideal,
    parse_ideal_structured,
)
from .monomials import MonomialIdeal, unit_ideal, zero_ideal
from .partitions import (
    Interval,
    IntervalPartition,
    InternalVerificationError,
    SdepthCertificate,
    SearchTimeout,
    sdepth_ideal,
    sdepth_quotient,
    verify_partition,
    verify_stanley_decomposition,
)
from .posets import alpha_formula, build_poset, default_box
from .structure import (
    conjecture_sweep,
    ideal_saturation_report,
    ideal_vs_quotient_report,
    janet_decomposition,
    mki_sweep,
    mki_rows_to_csv,
    sweep_rows_to_csv,
)


@dataclass(frozen=True)
class RunConfig:
    command: str
    input_path: str | None = None
    input_j_path: str | None = None
    g_override: tuple[int, ...] | None = None
    arity: int | None = None
    target_s: int | None = None
    timeout_s: float = 60.0
    threads: int = 1
    cache_dir: str | None = None
    out_path: str | None = None
    output_format: str = "text"
    n_min: int = 1
    n_max: int = 4
    k_min: int = 1
    k_max: int = 3
    alpha_n: int = 0
    alpha_k: int = 0
    certificate_path: str | None = None

    def __post_init__(self):
        if self.timeout_s <= 0:
            raise ValueError("timeout must be positive")
        if self.threads < 1:
            raise ValueError("thread count must be >= 1")


def _parse_g(value: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(part) for part in value.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"--g expects k1,...,kn, got {value!r}")
    if any(p < 0 for p in parts):
        raise argparse.ArgumentTypeError("--g entries must be nonnegative")
    return parts


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sdepthlab",
        description="Exact Stanley depth computations for monomial ideals")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(sp, *, needs_input=True, needs_j=False, search=True):
        if needs_input:
            sp.add_argument("--input", required=True,
                            help="ideal file (text or structured JSON)")
        if needs_j:
            sp.add_argument("--input-j", required=True,
                            help="denominator ideal file")
        if needs_input:
            sp.add_argument("--arity", type=int, default=None,
                            help="ambient arity (default: inferred from inputs)")
        if search:
            sp.add_argument("--g", type=_parse_g, default=None, metavar="K1,...,KN",
                            help="box corner override")
            sp.add_argument("--timeout", type=float, default=60.0,
                            help="per-decision wall clock budget in seconds")
            sp.add_argument("--threads", type=int, default=1)
        sp.add_argument("--cache", default=None, help="cache directory")
        sp.add_argument("--out", default=None, help="write the document here")
        sp.add_argument("--format", choices=("text", "structured"),
                        default="text", help="stdout format")

    add_common(sub.add_parser("sdepth", help="Stanley depth of an ideal"))
    add_common(sub.add_parser("quotient",
                              help="Stanley depth of I/J (use a '1' file for S/J)"),
               needs_j=True)
    add_common(sub.add_parser("sat", help="saturation report of an ideal"),
               search=False)
    add_common(sub.add_parser("janet", help="Janet decomposition of S/I"),
               search=False)

    alpha = sub.add_parser("alpha", help="level counts of the m^k poset")
    alpha.add_argument("n", type=int)
    alpha.add_argument("k", type=int)
    add_common(alpha, needs_input=False, search=False)

    conj = sub.add_parser("conjecture", help="sdepth(m^k) sweep vs ceil(n/(k+1))")
    conj.add_argument("--n-min", type=int, default=1)
    conj.add_argument("--n-max", type=int, default=4)
    conj.add_argument("--k-min", type=int, default=1)
    conj.add_argument("--k-max", type=int, default=3)
    conj.add_argument("--timeout", type=float, default=60.0)
    conj.add_argument("--threads", type=int, default=1)
    add_common(conj, needs_input=False, search=False)

    mki = sub.add_parser("mki", help="sweep of |G(m^k I)| and sdepth(m^k I)")
    add_common(mki, search=True)
    mki.add_argument("--k-min", type=int, default=0)
    mki.add_argument("--k-max", type=int, default=4)

    add_common(sub.add_parser(
        "remark17", help="compare sdepth(I) against sdepth(S/I) + 1"))

    verify = sub.add_parser("verify", help="re-check a stored certificate")
    verify.add_argument("certificate", help="certificate JSON path")
    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        input_path=getattr(args, "input", None),
        input_j_path=getattr(args, "input_j", None),
        g_override=getattr(args, "g", None),
        arity=getattr(args, "arity", None),
        timeout_s=getattr(args, "timeout", 60.0),
        threads=getattr(args, "threads", 1),
        cache_dir=getattr(args, "cache", None),
        out_path=getattr(args, "out", None),
        output_format=getattr(args, "format", "text"),
        n_min=getattr(args, "n_min", 1),
        n_max=getattr(args, "n_max", 4),
        k_min=getattr(args, "k_min", 1),
        k_max=getattr(args, "k_max", 3),
        alpha_n=getattr(args, "n", 0),
        alpha_k=getattr(args, "k", 0),
        certificate_path=getattr(args, "certificate", None),
    )


def _load_ideals(config: RunConfig) -> tuple[MonomialIdeal, MonomialIdeal | None]:
    """Parse the input ideal(s) over a common ambient arity.

    Text inputs infer their arity from the largest variable index; the
    shared arity is the maximum over all inputs, --arity and the --g
    length.  Structured inputs carry an explicit n and must match it.
    """
    text_i = Path(config.input_path).read_text(encoding="utf-8")
    text_j = None
    if config.input_j_path is not None:
        text_j = Path(config.input_j_path).read_text(encoding="utf-8")
    first = parse_ideal(text_i)
    second = parse_ideal(text_j) if text_j is not None else None
    n = max([first.arity] + ([second.arity] if second is not None else [])
            + ([len(config.g_override)] if config.g_override else [])
            + ([config.arity] if config.arity else []))
    ideal_i = parse_ideal(text_i, arity=n)
    ideal_j = parse_ideal(text_j, arity=n) if text_j is not None else None
    if ideal_i.arity != n or (ideal_j is not None and ideal_j.arity != n):
        raise IdealParseError(f"inputs disagree on the ambient arity {n}", 1)
    return ideal_i, ideal_j


def _ideal_hash(numerator: MonomialIdeal, denominator: MonomialIdeal,
                g: tuple[int, ...]) -> str:
    return content_key({
        "n": numerator.arity,
        "numerator": ideal_to_structured(numerator),
        "denominator": ideal_to_structured(denominator),
        "g": list(g),
        "engine": ENGINE_VERSION,
    })


def certificate_document(cert: SdepthCertificate) -> dict:
    poset = cert.poset
    return {
        "schema": "sdepth-certificate@1",
        "engine": ENGINE_VERSION,
        "n": poset.arity,
        "g": list(poset.g),
        "numerator": ideal_to_structured(poset.numerator),
        "denominator": ideal_to_structured(poset.denominator),
        "ideal_hash": _ideal_hash(poset.numerator, poset.denominator, poset.g),
        "s": cert.s,
        "intervals": [[list(iv.bottom), list(iv.top)] for iv in cert.partition],
        "verified": True,
        "stats": {
            "poset_size": len(poset),
            "nodes": cert.stats.nodes,
            "prunes": cert.stats.prunes,
        },
    }


def _document_text(document) -> str:
    if isinstance(document, str):
        return document
    return json.dumps(document, indent=2) + "\n"


def _emit(config: RunConfig, document, summary_lines) -> None:
    if config.out_path is not None:
        Path(config.out_path).write_text(_document_text(document),
                                         encoding="utf-8")
    if config.output_format == "structured":
        sys.stdout.write(_document_text(document))
    else:
        for line in summary_lines:
            print(line)


def _cached(config: RunConfig, key_payload: dict, compute):
    """Run `compute` through the cache when one is configured."""
    if config.cache_dir is None:
        return compute(), None
    cache = ResultCache(config.cache_dir)
    key = content_key({"engine": ENGINE_VERSION, **key_payload})
    payload = cache.load(key)
    if payload is not None:
        return payload, "hit"
    payload = compute()
    cache.store(key, payload)
    return payload, "miss"


def _cert_summary(document: dict) -> list[str]:
    return [
        f"sdepth = {document['s']}",
        f"n = {document['n']}, g = {tuple(document['g'])}, "
        f"|P| = {document['stats']['poset_size']}",
        f"intervals = {len(document['intervals'])}, "
        f"nodes = {document['stats']['nodes']}, "
        f"prunes = {document['stats']['prunes']}",
    ]


def cmd_sdepth(config: RunConfig) -> int:
    ideal, _ = _load_ideals(config)
    g = config.g_override or default_box(ideal, zero_ideal(ideal.arity))
    start = time.perf_counter()

    def compute():
        cert = sdepth_ideal(ideal, g=config.g_override,
                            timeout_s=config.timeout_s, threads=config.threads)
        return certificate_document(cert)

    document, _ = _cached(config, {
        "command": "sdepth",
        "ideal": ideal_to_structured(ideal),
        "g": list(g),
        "timeout": config.timeout_s,
    }, compute)
    _emit(config, document, _cert_summary(document))
    if config.output_format == "text":
        print(f"elapsed_ms: {int((time.perf_counter() - start) * 1000)}")
    return 0


def cmd_quotient(config: RunConfig) -> int:
    numerator, denominator = _load_ideals(config)
    g = config.g_override or default_box(numerator, denominator)
    start = time.perf_counter()

    def compute():
        cert = sdepth_quotient(numerator, denominator, g=config.g_override,
                               timeout_s=config.timeout_s,
                               threads=config.threads)
        return certificate_document(cert)

    document, _ = _cached(config, {
        "command": "quotient",
        "numerator": ideal_to_structured(numerator),
        "denominator": ideal_to_structured(denominator),
        "g": list(g),
        "timeout": config.timeout_s,
    }, compute)
    _emit(config, document, _cert_summary(document))
    if config.output_format == "text":
        print(f"elapsed_ms: {int((time.perf_counter() - start) * 1000)}")
    return 0


def cmd_sat(config: RunConfig) -> int:
    ideal, _ = _load_ideals(config)

    def compute():
        report = ideal_saturation_report(ideal)
        return {
            "schema": "saturation-report@1",
            "engine": ENGINE_VERSION,
            "n": ideal.arity,
            "ideal": ideal_to_structured(report.ideal),
            "saturation": ideal_to_structured(report.saturation),
            "is_saturated": report.is_saturated,
            "witness": list(report.witness) if report.witness else None,
            "sdepth_zero_quotient": not report.is_saturated,
        }

    document, _ = _cached(config, {
        "command": "sat", "ideal": ideal_to_structured(ideal),
    }, compute)
    witness = document["witness"]
    summary = [
        f"ideal = {ideal_str(ideal)}",
        f"saturation = {ideal_str(parse_ideal_structured(document['saturation']))}",
        f"is_saturated = {str(document['is_saturated']).lower()}",
        f"sdepth(S/I) = 0: {str(document['sdepth_zero_quotient']).lower()}",
    ]
    if witness is not None:
        summary.append(f"witness = {monomial_str(witness)}")
    _emit(config, document, summary)
    return 0


def _space_str(monomial, variables) -> str:
    inner = ",".join(f"x{j}" for j in sorted(variables))
    return f"{monomial_str(monomial)}*K[{inner}]"


def cmd_janet(config: RunConfig) -> int:
    ideal, _ = _load_ideals(config)
    decomposition = janet_decomposition(ideal)
    cap = sum(default_box(unit_ideal(ideal.arity), ideal))
    check = verify_stanley_decomposition(unit_ideal(ideal.arity), ideal,
                                         decomposition, cap)
    if not check:
        raise InternalVerificationError(check.reason)
    document = {
        "schema": "janet-decomposition@1",
        "engine": ENGINE_VERSION,
        "n": ideal.arity,
        "ideal": ideal_to_structured(ideal),
        "spaces": [{"monomial": list(m), "variables": sorted(z)}
                   for m, z in decomposition.spaces],
        "sdepth": decomposition.sdepth,
        "verified": True,
    }
    summary = [f"S/I decomposes into {len(decomposition.spaces)} Stanley spaces "
               f"(degreewise checked up to {cap}):"]
    summary += ["  " + _space_str(m, z) for m, z in decomposition.spaces]
    summary.append(f"sdepth of the decomposition = {decomposition.sdepth}")
    _emit(config, document, summary)
    return 0


def cmd_alpha(config: RunConfig) -> int:
    n, k = config.alpha_n, config.alpha_k
    rows = [(d, alpha_formula(n, k, d)) for d in range(k, k * n + 1)]
    document = "d,alpha\n" + "\n".join(f"{d},{a}" for d, a in rows) + "\n"
    summary = [f"alpha_d for n={n}, k={k} (d = {k}..{k * n}):"]
    summary += [f"  d={d}: {a}" for d, a in rows]
    summary.append(f"total = {sum(a for _, a in rows)}")
    _emit(config, document, summary)
    return 0


def cmd_conjecture(config: RunConfig) -> int:
    def compute():
        rows = conjecture_sweep(range(config.n_min, config.n_max + 1),
                                range(config.k_min, config.k_max + 1),
                                timeout_s=config.timeout_s,
                                threads=config.threads)
        return sweep_rows_to_csv(rows)

    document, _ = _cached(config, {
        "command": "conjecture",
        "n": [config.n_min, config.n_max],
        "k": [config.k_min, config.k_max],
        "timeout": config.timeout_s,
    }, compute)
    _emit(config, document, document.rstrip("\n").splitlines())
    return 0


def cmd_mki(config: RunConfig) -> int:
    ideal, _ = _load_ideals(config)

    def compute():
        rows = mki_sweep(ideal, range(config.k_min, config.k_max + 1),
                         timeout_s=config.timeout_s, threads=config.threads)
        return mki_rows_to_csv(rows)

    document, _ = _cached(config, {
        "command": "mki",
        "ideal": ideal_to_structured(ideal),
        "k": [config.k_min, config.k_max],
        "timeout": config.timeout_s,
    }, compute)
    _emit(config, document, document.rstrip("\n").splitlines())
    return 0


def cmd_remark17(config: RunConfig) -> int:
    ideal, _ = _load_ideals(config)

    def compute():
        report = ideal_vs_quotient_report(ideal, timeout_s=config.timeout_s,
                                          threads=config.threads)
        return {
            "schema": "sdepth-comparison@1",
            "engine": ENGINE_VERSION,
            "n": ideal.arity,
            "ideal": ideal_to_structured(ideal),
            "sdepth_ideal": report.sdepth_ideal,
            "sdepth_quotient": report.sdepth_quotient,
            "inequality_holds": report.inequality_holds,
        }

    document, _ = _cached(config, {
        "command": "remark17",
        "ideal": ideal_to_structured(ideal),
        "timeout": config.timeout_s,
    }, compute)
    _emit(config, document, [
        f"sdepth(I) = {document['sdepth_ideal']}",
        f"sdepth(S/I) = {document['sdepth_quotient']}",
        f"sdepth(I) >= sdepth(S/I) + 1: "
        f"{str(document['inequality_holds']).lower()} (reported, not asserted)",
    ])
    return 0


def cmd_verify(config: RunConfig) -> int:
    try:
        document = json.loads(Path(config.certificate_path).read_text(
            encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise IdealParseError(exc.msg, exc.lineno, exc.colno) from exc
    try:
        numerator = parse_ideal_structured(document["numerator"])
        denominator = parse_ideal_structured(document["denominator"])
        g = tuple(int(e) for e in document["g"])
        s = int(document["s"])
        intervals = IntervalPartition(tuple(
            Interval(tuple(int(e) for e in bottom), tuple(int(e) for e in top))
            for bottom, top in document["intervals"]))
        stored_hash = document["ideal_hash"]
    except (KeyError, TypeError) as exc:
        raise IdealParseError(f"malformed certificate: {exc!r}", 1) from exc
    poset = build_poset(numerator, denominator, g)
    check = verify_partition(poset, intervals, s)
    failures = []
    if not check:
        failures.append(check.reason)
    elif min(poset.rho(iv.top) for iv in intervals) != s:
        failures.append("partition witnesses a different s than recorded")
    if stored_hash != _ideal_hash(numerator, denominator, g):
        failures.append("ideal hash mismatch (stale or tampered certificate)")
    if failures:
        for failure in failures:
            print(f"certificate INVALID: {failure}", file=sys.stderr)
        return 4
    print(f"certificate ok: sdepth = {s} over {len(poset)} poset elements")
    return 0


_DISPATCH = {
    "sdepth": cmd_sdepth,
    "quotient": cmd_quotient,
    "sat": cmd_sat,
    "janet": cmd_janet,
    "alpha": cmd_alpha,
    "conjecture": cmd_conjecture,
    "mki": cmd_mki,
    "remark17": cmd_remark17,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        config = _config_from_args(args)
        return _DISPATCH[args.command](config)
    except IdealParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except SearchTimeout as exc:
        print(f"timeout: {exc}", file=sys.stderr)
        return 3
    except InternalVerificationError as exc:
        print(f"internal verification failure: {exc}", file=sys.stderr)
        return 4
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
