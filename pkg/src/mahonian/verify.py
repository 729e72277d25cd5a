"""Exhaustive desk-scale checks of the codec and distribution identities.

Each check scans every permutation and/or inversion table of length
0..n_max, stops at the first counterexample, and reports how many cases it
looked at.  Counterexample strings carry the length, the offending object,
and the expected/actual values.
"""

from __future__ import annotations

from typing import Callable, NamedTuple

from . import distributions, permutations, tables
from .permutations import ENUM_CAP_DEFAULT

__all__ = ["CheckResult", "CHECKS", "run_checks"]


class CheckResult(NamedTuple):
    name: str
    cases: int
    failure: str | None  # first counterexample, None when the check passed

    @property
    def ok(self) -> bool:
        return self.failure is None


def check_roundtrip(n_max: int, max_enum: int = ENUM_CAP_DEFAULT) -> CheckResult:
    """encode(decode(t)) == t and decode(encode(p)) == p for all codecs."""
    cases = 0
    for n in range(n_max + 1):
        for codec in tables.CODECS:
            decode = tables.DECODERS[codec]
            encode = tables.ENCODERS[codec]
            for t in tables.all_tables(n, max_enum):
                cases += 1
                back = encode(decode(t))
                if back != t:
                    return CheckResult(
                        "roundtrip",
                        cases,
                        f"n={n} codec={codec} table={t}: "
                        f"expected encode(decode(table)) = {t}, got {back}",
                    )
            for p in permutations.all_permutations(n, max_enum):
                cases += 1
                back = decode(encode(p))
                if back != p:
                    return CheckResult(
                        "roundtrip",
                        cases,
                        f"n={n} codec={codec} permutation={p}: "
                        f"expected decode(encode(permutation)) = {p}, got {back}",
                    )
    return CheckResult("roundtrip", cases, None)


def check_stat_sums(n_max: int, max_enum: int = ENUM_CAP_DEFAULT) -> CheckResult:
    """inv of the inv-decoded word and maj of the maj-decoded word both
    equal the entry sum."""
    cases = 0
    for n in range(n_max + 1):
        for t in tables.all_tables(n, max_enum):
            total = tables.table_sum(t)
            cases += 1
            got = permutations.inv_stat(tables.decode_inv(t))
            if got != total:
                return CheckResult(
                    "sums",
                    cases,
                    f"n={n} table={t}: expected inv(decode_inv(table)) = {total}, got {got}",
                )
            cases += 1
            got = permutations.maj_stat(tables.decode_maj(t))
            if got != total:
                return CheckResult(
                    "sums",
                    cases,
                    f"n={n} table={t}: expected maj(decode_maj(table)) = {total}, got {got}",
                )
    return CheckResult("sums", cases, None)


def check_rightmost_stats(n_max: int, max_enum: int = ENUM_CAP_DEFAULT) -> CheckResult:
    """Under rightmost-insertion decoding, inv is the entry sum and maj is
    the ascent-position sum."""
    cases = 0
    for n in range(n_max + 1):
        for t in tables.all_tables(n, max_enum):
            p = tables.decode_rightmost(t)
            cases += 1
            expected = tables.table_sum(t)
            got = permutations.inv_stat(p)
            if got != expected:
                return CheckResult(
                    "rightmost",
                    cases,
                    f"n={n} table={t}: expected inv(decode_rightmost(table)) = "
                    f"{expected}, got {got}",
                )
            cases += 1
            expected = tables.table_ascent_sum(t)
            got = permutations.maj_stat(p)
            if got != expected:
                return CheckResult(
                    "rightmost",
                    cases,
                    f"n={n} table={t}: expected maj(decode_rightmost(table)) = "
                    f"{expected}, got {got}",
                )
    return CheckResult("rightmost", cases, None)


def check_inverse_relation(n_max: int, max_enum: int = ENUM_CAP_DEFAULT) -> CheckResult:
    """Rightmost-insertion decoding yields the inverse of inv-insertion
    decoding."""
    cases = 0
    for n in range(n_max + 1):
        for t in tables.all_tables(n, max_enum):
            cases += 1
            expected = permutations.inverse(tables.decode_inv(t))
            got = tables.decode_rightmost(t)
            if got != expected:
                return CheckResult(
                    "inverse",
                    cases,
                    f"n={n} table={t}: expected decode_rightmost(table) = "
                    f"{expected}, got {got}",
                )
    return CheckResult("inverse", cases, None)


def check_slot_bijection(n_max: int, max_enum: int = ENUM_CAP_DEFAULT) -> CheckResult:
    """Every admissible maj increase is realized exactly, and distinct
    increases get distinct slots."""
    cases = 0
    for j in range(n_max + 1):
        for word in permutations.all_permutations(j, max_enum):
            before = permutations.maj_stat(word)
            slots = set()
            for delta in range(j + 1):
                cases += 1
                pos = tables.maj_insertion_outcome(word, delta).position
                grown = word[:pos] + (j,) + word[pos:]
                realized = permutations.maj_stat(grown) - before
                if realized != delta:
                    return CheckResult(
                        "slots",
                        cases,
                        f"n={j} permutation={word}: expected maj delta {delta} "
                        f"at slot {pos}, got {realized}",
                    )
                if pos in slots:
                    return CheckResult(
                        "slots",
                        cases,
                        f"n={j} permutation={word}: expected distinct slots, "
                        f"got slot {pos} twice (delta {delta})",
                    )
                slots.add(pos)
    return CheckResult("slots", cases, None)


def check_equidistribution(n_max: int, max_enum: int = ENUM_CAP_DEFAULT) -> CheckResult:
    """inv counts, maj counts, and the Mahonian DP vector all coincide."""
    cases = 0
    for n in range(n_max + 1):
        by_inv = distributions.stat_distribution(n, "inv", max_enum)
        by_maj = distributions.stat_distribution(n, "maj", max_enum)
        dp = distributions.mahonian_numbers(n, max_n=max(n, distributions.DP_CAP_DEFAULT))
        for k in range(len(dp.counts)):
            cases += 2
            if by_inv.counts[k] != dp.counts[k]:
                return CheckResult(
                    "equidist",
                    cases,
                    f"n={n} k={k}: expected inv count {dp.counts[k]}, "
                    f"got {by_inv.counts[k]}",
                )
            if by_maj.counts[k] != dp.counts[k]:
                return CheckResult(
                    "equidist",
                    cases,
                    f"n={n} k={k}: expected maj count {dp.counts[k]}, "
                    f"got {by_maj.counts[k]}",
                )
    return CheckResult("equidist", cases, None)


def check_joint_symmetry(n_max: int, max_enum: int = ENUM_CAP_DEFAULT) -> CheckResult:
    """The (inv, maj) joint matrix equals its transpose."""
    cases = 0
    for n in range(n_max + 1):
        m = distributions.joint_distribution(n, max_enum)
        size = len(m.cells)
        cases += size * (size - 1) // 2
        violations = distributions.check_symmetry(m)
        if violations:
            k, k2, a, b = violations[0]
            return CheckResult(
                "symmetry",
                cases,
                f"n={n} cell=({k},{k2}): expected mirror counts to match, "
                f"got {a} vs {b}",
            )
    return CheckResult("symmetry", cases, None)


def check_transport(n_max: int, max_enum: int = ENUM_CAP_DEFAULT) -> CheckResult:
    """The table-statistic joint matrix equals the permutation one cellwise."""
    cases = 0
    for n in range(n_max + 1):
        from_perms = distributions.joint_distribution(n, max_enum)
        from_tables = distributions.table_stat_joint(n, max_enum)
        size = len(from_perms.cells)
        for k in range(size):
            for k2 in range(size):
                cases += 1
                if from_tables.cells[k][k2] != from_perms.cells[k][k2]:
                    return CheckResult(
                        "transport",
                        cases,
                        f"n={n} cell=({k},{k2}): expected "
                        f"{from_perms.cells[k][k2]}, got {from_tables.cells[k][k2]}",
                    )
    return CheckResult("transport", cases, None)


CHECKS: dict[str, Callable[[int, int], CheckResult]] = {
    "roundtrip": check_roundtrip,
    "sums": check_stat_sums,
    "rightmost": check_rightmost_stats,
    "inverse": check_inverse_relation,
    "slots": check_slot_bijection,
    "equidist": check_equidistribution,
    "symmetry": check_joint_symmetry,
    "transport": check_transport,
}


def run_checks(
    names: list[str], n_max: int, max_enum: int = ENUM_CAP_DEFAULT
) -> list[CheckResult]:
    """Run the named checks in order; unknown names raise ValueError."""
    for name in names:
        if name not in CHECKS:
            known = ", ".join(CHECKS)
            raise ValueError(f"unknown check {name!r}; known checks: {known}")
    return [CHECKS[name](n_max, max_enum) for name in names]
