"""
Verify command.

Builds every level of the chain, factors the shifted recurrence matrices
and checks the requested identities on the safe window.
"""

import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from algebra.banded import BandedHessenberg, safe_window
from algebra.errors import BadShape, ChainBroken, DOPSError, VerificationFailed
from algebra.scalars import format_scalar
from artifacts.models import Scenario
from artifacts.store import get_store, read_json
from engine.duality import largest_solvable_degree, sequence_from_functionals
from engine.orthogonality import verify_orthogonality
from engine.recurrence import recurrence_from_sequence
from engine.sequence import DOPSequence
from factorization.chain import BidiagonalChain, build_chain, u_diagonal_from_pd, verify_product_factorization
from factorization.connection import connection_pair
from factorization.reports import IdentityReport, Mismatch
from factorization.verify import verify_n_factorization, verify_theorem3, verify_theorem4
from geronimus.models import TransformLevel
from handlers.common import build_base, build_levels, load_scenario
from utils.validators import CHECKS

logger = logging.getLogger(__name__)


def theorem4_pairs(d: int) -> List[Tuple[int, int]]:
    """(0,1), (0,d) and (1,d-1), without repeats or empty steps."""
    pairs = []
    for r, q in ((0, 1), (0, d), (1, d - 1)):
        if q >= 1 and r + q <= d and (r, q) not in pairs:
            pairs.append((r, q))
    return pairs


def _orthogonality_entries(levels: Sequence[TransformLevel]) -> List[Dict[str, Any]]:
    entries = []
    for level in levels:
        report = verify_orthogonality(level.vector, level.sequence)
        entries.append({
            "identity": f"orthogonality[m={level.m}]",
            "window": level.vector.horizon,
            "pass": report.passed,
            "mismatches": [c.to_dict() for c in report.failures],
        })
    return entries


def _oracle_entries(levels: Sequence[TransformLevel]) -> List[Dict[str, Any]]:
    """Compare each level sequence with the moment solve of its vector."""
    entries = []
    for level in levels:
        top = min(level.sequence.max_degree, largest_solvable_degree(level.vector))
        mismatches: List[Dict[str, Any]] = []
        try:
            oracle = sequence_from_functionals(level.vector, top)
            expected = level.sequence.truncate(top)
            mismatches = [
                {"n": n, "lhs": str(p), "rhs": str(q)}
                for n, (p, q) in enumerate(zip(expected, oracle))
                if p != q
            ]
        except DOPSError as e:
            mismatches = [e.details()]
        entries.append({
            "identity": f"oracle[m={level.m}]",
            "window": top,
            "pass": not mismatches,
            "mismatches": mismatches,
        })
    return entries


def _u_diagonal_report(S_d: DOPSequence, chain: BidiagonalChain, window: int) -> IdentityReport:
    computed = u_diagonal_from_pd(S_d, chain.a)
    stored = chain.U.diagonal()
    mismatches = tuple(
        Mismatch(n, n, stored[n], computed[n]) for n in range(window) if stored[n] != computed[n]
    )
    return IdentityReport("U diagonal=-P^(d)_{n+1}(a)/P^(d)_n(a)", window, mismatches)


async def _load_chain(path: Union[str, Path], scenario: Scenario) -> BidiagonalChain:
    chain = BidiagonalChain.from_dict(await read_json(path))
    if chain.d != scenario.d:
        raise BadShape(f"chain has d = {chain.d}, scenario has d = {scenario.d}")
    if chain.a != scenario.require_geronimus().a:
        raise BadShape(f"chain was built for a = {chain.a}")
    logger.info(f"Loaded chain from {path}")
    return chain


def render_summary(scenario: Scenario, window: int, entries: List[Dict[str, Any]]) -> str:
    """Plain-text summary, one line per check."""
    lines = [f"d={scenario.d} N={scenario.N} a={format_scalar(scenario.require_geronimus().a)} window={window}"]
    for entry in entries:
        status = "PASS" if entry["pass"] else "FAIL"
        suffix = "" if entry["pass"] else f" ({len(entry['mismatches'])} mismatches)"
        lines.append(f"{status} {entry['identity']}{suffix}")
    passed = sum(1 for e in entries if e["pass"])
    lines.append(f"{passed}/{len(entries)} checks passed")
    return "\n".join(lines) + "\n"


async def cmd_verify(scenario_path: Union[str, Path], chain_path: Optional[Union[str, Path]] = None) -> None:
    """
    Run the scenario checks and write report.json and summary.txt.

    Args:
        scenario_path: Scenario file
        chain_path: Previously written chain.json to check instead of
            building a fresh chain

    Raises:
        ChainBroken: If some level is not regular
        VerificationFailed: If any identity fails
    """
    scenario = await load_scenario(scenario_path)
    cfg = scenario.require_geronimus()
    d, a = scenario.d, cfg.a
    base = build_base(scenario)
    levels = build_levels(scenario, base, d)
    for level in levels:
        first = level.first_vanishing()
        if first is not None:
            raise ChainBroken(level.m, f"d^({level.m})_{first} vanishes")

    sequences = [level.sequence for level in levels]
    J_levels: List[BandedHessenberg] = [recurrence_from_sequence(s) for s in sequences]
    window = safe_window(J_levels[0].size, d)
    store = get_store()

    if chain_path is None:
        chain = build_chain(sequences, a)
        await store.write_json("chain.json", chain.to_dict())
    else:
        chain = await _load_chain(chain_path, scenario)

    entries: List[Dict[str, Any]] = []
    for check in CHECKS:
        if check not in scenario.checks:
            continue
        if check == "orthogonality":
            entries.extend(_orthogonality_entries(levels))
        elif check == "oracle":
            entries.extend(_oracle_entries(levels))
        else:
            reports: List[IdentityReport] = []
            if check == "theorem4":
                for r, q in theorem4_pairs(d):
                    pair = connection_pair(sequences[r], sequences[r + q], r, q, a)
                    reports.extend(verify_theorem4(J_levels[r], J_levels[r + q], pair, a, window))
            elif check == "theorem3":
                reports = verify_theorem3(J_levels, chain, a, window)
            elif check == "product_factorization":
                reports = verify_product_factorization(sequences, chain.L_factors, window)
            elif check == "n_factorization":
                reports = verify_n_factorization(sequences, chain, window)
            elif check == "u_diagonal":
                reports = [_u_diagonal_report(sequences[d], chain, window)]
            entries.extend(report.to_dict() for report in reports)

    passed = all(entry["pass"] for entry in entries)
    await store.write_json("report.json", {
        "d": d,
        "N": scenario.N,
        "a": format_scalar(a),
        "window": window,
        "pass": passed,
        "checks": entries,
    })
    summary = render_summary(scenario, window, entries)
    await store.write_text("summary.txt", summary)
    sys.stdout.write(summary)

    if not passed:
        failures = [
            {"identity": e["identity"], "mismatches": e["mismatches"]} for e in entries if not e["pass"]
        ]
        raise VerificationFailed(failures)
    logger.info(f"All {len(entries)} checks passed on a {window}x{window} window")
