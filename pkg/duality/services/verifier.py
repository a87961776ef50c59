"""Verification suites: each one builds models and checks them against the oracles."""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable

import numpy as np

from duality.core.config import settings
from duality.core.exceptions import (
    BudgetExceededError,
    DualityError,
    MalformedInputError,
    ShapeMismatchError,
)
from duality.models.domain import Partition
from duality.models.response import ReportBundle, VerificationReport, Witness
from duality.services import combinatorics as comb
from duality.services import flag_geometry as geo
from duality.services import rsk as rsk_service
from duality.services import schur_algebra as schur
from duality.services import tensor_models as tm

logger = logging.getLogger(__name__)

SUITES = (
    "convolution",
    "dimensions",
    "ginzburg",
    "howe",
    "orbits",
    "schur",
    "springer",
    "zero-weight",
)

# Desk-scale parameters used when a flag is absent and by ``verify all``.
DEFAULT_PARAMETERS: dict[str, dict[str, int | None]] = {
    "convolution": {"n": 2, "m": 2, "k": 2, "d": 2, "a": 1, "b": 1},
    "dimensions": {"n": 2, "m": 3, "d": 3},
    "ginzburg": {"n": 2, "d": 2},
    "howe": {"n": 2, "m": 2, "d": 2},
    "orbits": {"n": 2, "m": 2, "d": 2},
    "schur": {"n": 2, "d": 3},
    "springer": {"d": 4, "k": None},
    "zero-weight": {"n": 2, "d": 3},
}

# Exhaustive triple checks on the multiplication table stop at this dimension.
EXHAUSTIVE_ALGEBRA_DIM = 20
STRUCTURE_CONSTANT_PAIRS = 400


def _w(claim: str, left: Any, right: Any) -> Witness:
    return Witness(claim=claim, left=left, right=right)


def _weights_text(weights: list[tuple[tuple[int, ...], tuple[int, ...]]]) -> str:
    return ";".join(f"{list(a)}|{list(b)}" for a, b in weights)


def _row(d: int) -> Partition:
    return Partition.of(d) if d else Partition()


class DualityVerifier:
    """Runs the verification suites with a fixed budget and random seed."""

    def __init__(
        self,
        budget: int | None = None,
        seed: int | None = None,
        group_samples: int | None = None,
    ):
        self.budget = settings.budget if budget is None else budget
        self.seed = settings.default_seed if seed is None else seed
        self.group_samples = (
            settings.group_samples if group_samples is None else group_samples
        )

    def rng(self) -> np.random.Generator:
        return np.random.default_rng(self.seed)

    def run(self, suite: str, **params: int | None) -> VerificationReport:
        """
        Run one suite and time it.

        Args:
            suite: One of ``SUITES``
            params: Suite parameters (n, m, d, k, a, b); missing ones take defaults

        Returns:
            VerificationReport: Witnesses of the suite with ``wall_time`` set

        Raises:
            BudgetExceededError: If a model would exceed the budget
            MalformedInputError: If the parameters are invalid
        """
        if suite not in SUITES:
            raise ShapeMismatchError(
                f"unknown suite {suite!r}; choose from {', '.join(SUITES)}"
            )
        merged = dict(DEFAULT_PARAMETERS[suite])
        merged.update(
            {k: v for k, v in params.items() if v is not None and k in merged}
        )
        for name, value in merged.items():
            lowest = 0 if name == "d" else 1
            if value is not None and value < lowest:
                raise MalformedInputError(
                    f"parameter {name} must be at least {lowest}, got {value}"
                )
        handler: Callable[..., VerificationReport] = getattr(
            self, suite.replace("-", "_")
        )
        logger.info(f"Starting suite {suite} with {merged}")
        started = time.perf_counter()
        try:
            report = handler(**merged)
        except DualityError:
            raise
        except Exception as e:
            logger.exception(f"Unexpected error in suite {suite}: {e}")
            raise
        elapsed = round(time.perf_counter() - started, 6)
        report = report.model_copy(update={"wall_time": elapsed})
        for witness in report.failures:
            logger.warning(
                f"{suite}: failed {witness.claim}: {witness.left} != {witness.right}"
            )
        logger.info(report.summary())
        return report

    def _report(
        self,
        check: str,
        parameters: dict[str, Any],
        witnesses: list[Witness],
        notes: list[str] | None = None,
    ) -> VerificationReport:
        return VerificationReport(
            check=check,
            parameters={"budget": self.budget, "seed": self.seed, **parameters},
            witnesses=witnesses,
            notes=notes or [],
        )

    # ------------------------------------------------------------------
    # Howe duality on the symmetric model
    # ------------------------------------------------------------------

    def howe(self, n: int, m: int, d: int) -> VerificationReport:
        lams = comb.enumerate_partitions(d, min(n, m))
        terms = [comb.dim_gl_irrep(n, lam) * comb.dim_gl_irrep(m, lam) for lam in lams]
        total = comb.binomial(n * m + d - 1, d)
        witnesses = [
            _w(
                f"dim S^{d}(C^{n}xC^{m}) = {'+'.join(map(str, terms))}",
                total,
                sum(terms),
            ),
        ]
        model = tm.build_symmetric_model(n, m, d, self.budget)
        found = sorted(
            (v.weight_pair for v in tm.joint_highest_weight_vectors(model)),
            reverse=True,
        )
        witnesses += [
            _w("model dimension = binomial(nm+d-1, d)", model.dim, total),
            _w(
                "joint highest weights = {(lambda, lambda)}",
                _weights_text(found),
                _weights_text(tm.expected_joint_weights(n, m, d)),
            ),
            _w(
                "gl_n relations hold",
                len(tm.gl_relation_failures(model.left, model.dim)),
                0,
            ),
            _w(
                "gl_m relations hold",
                len(tm.gl_relation_failures(model.right, model.dim)),
                0,
            ),
            _w("gl_n and gl_m actions commute", len(tm.commutation_failures(model)), 0),
            _w(
                "monomial weights = (row sums, column sums)",
                len(tm.weight_failures(model)),
                0,
            ),
        ]
        one_sided = tm.build_symmetric_model(n, 1, d, self.budget)
        vectors = tm.joint_highest_weight_vectors(one_sided)
        witnesses += [
            _w("m=1: number of highest weight vectors", len(vectors), 1),
            _w(
                "m=1: highest weight is (d, 0, ..., 0)",
                _weights_text([v.weight_pair for v in vectors]),
                _weights_text([(_row(d).padded(n), _row(d).padded(1))]),
            ),
            _w(
                "m=1: dimension = dim V^n_(d)",
                one_sided.dim,
                comb.dim_gl_irrep(n, _row(d)),
            ),
        ]
        notes = []
        if d >= 1:
            try:
                polarization = schur.verify_polarization_in_schur_algebra(
                    n, m, d, self.budget
                )
            except BudgetExceededError as e:
                notes.append(f"Schur algebra check skipped: {e.message}")
            else:
                witnesses += [
                    _w(
                        "E_ab on (C^n)^d = sum_A c_A xi_A",
                        polarization.expanded,
                        polarization.generators,
                    ),
                    _w(
                        "E_ab on unit column sums of S^d(C^n x C^d) = E_ab on (C^n)^d",
                        polarization.restricted,
                        polarization.generators,
                    ),
                    _w(
                        "E_ab commutes with every F_ce",
                        polarization.commuting,
                        polarization.commuting_total,
                    ),
                ]
        return self._report("howe", {"n": n, "m": m, "d": d}, witnesses, notes)

    # ------------------------------------------------------------------
    # Schur-Weyl duality on the tensor space
    # ------------------------------------------------------------------

    def schur(self, n: int, d: int) -> VerificationReport:
        tensor = tm.build_tensor_space(n, d, self.budget)
        witnesses = [
            _w("tensor space dimension = n^d", tensor.dim, n**d),
            _w(
                "gl_n relations hold",
                len(tm.gl_relation_failures(tensor.left, tensor.dim)),
                0,
            ),
            _w(
                "S_d relations hold",
                len(
                    tm.symmetric_group_relation_failures(
                        tensor.transpositions, tensor.dim
                    )
                ),
                0,
            ),
            _w("gl_n and S_d actions commute", len(tm.commutation_failures(tensor)), 0),
            _w("word weights = contents", len(tm.weight_failures(tensor)), 0),
        ]
        for rho in comb.enumerate_partitions(d):
            witnesses.append(
                _w(
                    f"trace of place permutation {rho} = n^#cycles",
                    tm.place_permutation_trace(tensor, tm.cycle_representative(rho)),
                    n**rho.length,
                )
            )
        notes = []
        squares = sum(
            comb.dim_gl_irrep(n, lam) ** 2 for lam in comb.enumerate_partitions(d, n)
        )
        if tensor.dim**2 <= self.budget:
            witnesses.append(
                _w(
                    "commutant dimension = sum dim(V_lambda)^2",
                    schur.tensor_commutant_dim(n, d, self.budget),
                    squares,
                )
            )
        else:
            notes.append(
                f"commutant check skipped: (n^d)^2 = {tensor.dim**2} "
                f"exceeds budget {self.budget}"
            )
        bookkeeping = 0
        multiplicities = tm.schur_duality_multiplicities(n, d, tensor)
        for lam, (sym_mult, gl_mult) in multiplicities.items():
            witnesses.append(
                _w(
                    f"multiplicity of S_{lam} = dim V^{n}_{lam}",
                    sym_mult,
                    comb.dim_gl_irrep(n, lam),
                )
            )
            witnesses.append(
                _w(
                    f"multiplicity of V^{n}_{lam} = f^{lam}",
                    gl_mult,
                    comb.dim_sym_irrep(lam),
                )
            )
            bookkeeping += comb.dim_gl_irrep(n, lam) * comb.dim_sym_irrep(lam)
        witnesses.append(_w("n^d = sum dim V_lambda * f^lambda", n**d, bookkeeping))
        return self._report("schur", {"n": n, "d": d}, witnesses, notes)

    # ------------------------------------------------------------------
    # Springer theory for S_d
    # ------------------------------------------------------------------

    def springer(self, d: int, k: int | None = None) -> VerificationReport:
        if d < 1:
            raise ShapeMismatchError("Springer checks need d >= 1")
        order = comb.factorial_of(d)
        squares = [comb.dim_sym_irrep(lam) ** 2 for lam in comb.enumerate_partitions(d)]
        witnesses = [_w(f"sum (f^lambda)^2 = {d}!", sum(squares), order)]
        perms = list(comb.all_permutations(d))
        shapes = {w: rsk_service.rs_shape(w) for w in perms}
        witnesses += [
            _w(
                "rows of RS shape = lds",
                sum(shapes[w].length != rsk_service.lds(w) for w in perms),
                0,
            ),
            _w(
                "first row of RS shape = lis",
                sum(_first(shapes[w]) != rsk_service.lis(w) for w in perms),
                0,
            ),
            _w(
                "RS shape of inverse = RS shape",
                sum(shapes[w] != shapes[w.inverse()] for w in perms),
                0,
            ),
        ]
        ks = [k] if k is not None else list(range(1, d + 1))
        for bound in ks:
            witnesses.append(
                _w(
                    f"#{{w : lds(w) <= {bound}}} = "
                    f"sum over length <= {bound} of (f^lambda)^2",
                    sum(1 for w in perms if shapes[w].length <= bound),
                    sum(
                        comb.dim_sym_irrep(lam) ** 2
                        for lam in comb.enumerate_partitions(d, bound)
                    ),
                )
            )
        notes = []
        if order * order <= self.budget:
            for bound in ks:
                truncated = schur.truncated_group_algebra(d, bound, self.budget)
                witnesses.append(
                    _w(
                        f"dim e_<={bound} Q[S_{d}] = sum (f^lambda)^2",
                        truncated.ideal_dim,
                        truncated.expected,
                    )
                )
                witnesses.append(
                    _w(
                        f"dim e_<={bound} Q[S_{d}] = #{{lds <= {bound}}}",
                        truncated.ideal_dim,
                        truncated.rsk_count,
                    )
                )
                for other in ks:
                    rule = schur.idempotent_product_rule(d, bound, other)
                    witnesses.append(
                        _w(
                            f"e_<={bound} e_<={other} = e_<={min(bound, other)}",
                            int(rule.product_rule),
                            1,
                        )
                    )
                rule = schur.idempotent_product_rule(d, bound, bound)
                witnesses.append(
                    _w(f"e_<={bound} is idempotent", int(rule.idempotent), 1)
                )
                witnesses.append(_w(f"e_<={bound} is central", int(rule.central), 1))
            top = schur.truncation_idempotent(d, d)
            witnesses.append(
                _w(f"e_<={d} is the unit", int(top == schur.identity_element(d)), 1)
            )
        else:
            notes.append(
                f"group algebra checks skipped: (d!)^2 = {order * order} "
                f"exceeds budget {self.budget}"
            )
        return self._report("springer", {"d": d, "k": k}, witnesses, notes)

    # ------------------------------------------------------------------
    # Dimension calculus of the flag varieties
    # ------------------------------------------------------------------

    def dimensions(self, n: int, m: int, d: int) -> VerificationReport:
        report = geo.dimension_identity_check(n, m, d)
        witnesses = list(report.witnesses)
        rng = self.rng()
        for lam in comb.enumerate_partitions(d):
            witnesses.append(
                _w(
                    f"orbit dim of {lam} = d^2 - centralizer dim",
                    geo.nilpotent_orbit_dim(lam),
                    d * d - geo.centralizer_dim(lam),
                )
            )
            for flag_type in comb.weak_compositions(d, n):
                kostka_positive = comb.kostka(lam, flag_type.steps) > 0
                found = geo.conjugated_stable_flag(lam, flag_type, rng)
                witnesses.append(
                    _w(
                        f"stable flag of type {flag_type.steps} for {lam} "
                        "exists iff K > 0",
                        int(found is not None),
                        int(kostka_positive),
                    )
                )
                if found is not None:
                    x, flag = found
                    witnesses.append(
                        _w(
                            f"conjugated flag of type {flag_type.steps} "
                            f"is stable under x_{lam}",
                            int(geo.is_stable(x, flag)),
                            1,
                        )
                    )
        partitions = comb.enumerate_partitions(d)
        violations = sum(
            1
            for lam in partitions
            for mu in partitions
            if lam != mu
            and geo.closure_order(lam, mu)
            and not geo.nilpotent_orbit_dim(lam) < geo.nilpotent_orbit_dim(mu)
        )
        witnesses.append(
            _w(
                "orbit dimension strictly increases along the closure order",
                violations,
                0,
            )
        )
        if d >= 1:
            census = geo.component_census(n, m, d, min(n, m))
            witnesses.append(
                _w("components = binomial(nm+d-1, d)", census.total, census.expected)
            )
        return self._report("dimensions", {"n": n, "m": m, "d": d}, witnesses)

    # ------------------------------------------------------------------
    # Orbits of flag pairs
    # ------------------------------------------------------------------

    def orbits(self, n: int, m: int, d: int) -> VerificationReport:
        if d < 1:
            raise ShapeMismatchError("orbit checks need d >= 1")
        rng = self.rng()
        count, matrices = geo.count_orbits(n, m, d)
        witnesses = [
            _w("number of orbit labels = binomial(nm+d-1, d)", len(matrices), count),
            _w(
                "number of orbit labels = sum dim V^n dim V^m",
                len(matrices),
                sum(
                    comb.dim_gl_irrep(n, lam) * comb.dim_gl_irrep(m, lam)
                    for lam in comb.enumerate_partitions(d, min(n, m))
                ),
            ),
        ]
        first_types = comb.weak_compositions(d, n)
        second_types = comb.weak_compositions(d, m)
        firsts = [geo.random_flag(t, rng) for t in first_types]
        seconds = [geo.random_flag(t, rng) for t in second_types]
        counts = geo.invariance_counts(firsts, seconds, self.group_samples, rng)
        for i, t1 in enumerate(first_types):
            for j, t2 in enumerate(second_types):
                invariant = geo.orbit_invariant(firsts[i], seconds[j])
                witnesses += [
                    _w(
                        f"types {t1.steps},{t2.steps}: "
                        f"invariant under {self.group_samples} g",
                        counts[(i, j)],
                        self.group_samples,
                    ),
                    _w(
                        f"types {t1.steps},{t2.steps}: row sums",
                        str(invariant.row_sums),
                        str(t1.steps),
                    ),
                    _w(
                        f"types {t1.steps},{t2.steps}: column sums",
                        str(invariant.col_sums),
                        str(t2.steps),
                    ),
                ]
        realized = sum(
            geo.orbit_invariant(*geo.realize_orbit(a)) == a for a in matrices
        )
        witnesses.append(
            _w(
                "every label is realized by a coordinate flag pair",
                realized,
                len(matrices),
            )
        )
        roundtrip = sum(
            rsk_service.inverse_rsk(*rsk_service.rsk(a), n=n, m=m) == a
            for a in matrices
        )
        witnesses.append(_w("inverse_rsk(rsk(A)) = A", roundtrip, len(matrices)))
        by_types: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = {}
        for a in matrices:
            key = (a.row_sums, a.col_sums)
            by_types[key] = by_types.get(key, 0) + 1
        for (rows, cols), found in sorted(by_types.items()):
            witnesses.append(
                _w(
                    f"#labels with sums {rows},{cols} = sum K K",
                    found,
                    sum(
                        comb.kostka(lam, cols) * comb.kostka(lam, rows)
                        for lam in comb.enumerate_partitions(d)
                    ),
                )
            )
        return self._report(
            "orbits",
            {"n": n, "m": m, "d": d, "samples": self.group_samples},
            witnesses,
        )

    # ------------------------------------------------------------------
    # Convolution of truncated intertwiner spaces
    # ------------------------------------------------------------------

    def convolution(
        self, n: int, m: int, k: int, d: int, a: int, b: int
    ) -> VerificationReport:
        x = schur.build_intertwiner_space(n, k, d, a, self.budget)
        y = schur.build_intertwiner_space(k, m, d, b, self.budget)
        result = schur.compose_intertwiners(x, y)
        target = schur.build_intertwiner_space(n, m, d, result.truncation, self.budget)
        witnesses = [
            _w(f"dim H(n={n}, k={k}; r={a})", x.dim, x.expected_dim()),
            _w(f"dim H(k={k}, m={m}; r={b})", y.dim, y.expected_dim()),
            _w(
                f"dim H(n={n}, m={m}; r={result.truncation})",
                target.dim,
                target.expected_dim(),
            ),
            _w(
                "products lie in the min-truncated space",
                result.contained,
                result.pairs,
            ),
            _w(
                f"product supports have length <= {min(n, a, k, b, m)}",
                result.support_ok,
                result.pairs,
            ),
            _w("products span the min-truncated space", result.product_dim, target.dim),
        ]
        if x.dim * y.dim <= EXHAUSTIVE_ALGEBRA_DIM**2:
            right = schur.basis_coordinates(m, m, d)
            failures = schur.associativity_failures(
                x.basis(), y.basis(), right, (n, k, m, m), d
            )
            witnesses.append(_w("(X Y) Z = X (Y Z)", failures, 0))
        bimodule = schur.verify_bimodule(n, m, d, result.truncation)
        witnesses += [
            _w(
                "left S(n,d) action preserves the space",
                bimodule.left_closed,
                bimodule.left_total,
            ),
            _w(
                "right S(m,d) action preserves the space",
                bimodule.right_closed,
                bimodule.right_total,
            ),
            _w(
                "left and right actions commute",
                bimodule.commuting,
                bimodule.commuting_total,
            ),
        ]
        notes = ["supports: " + ",".join(str(lam) for lam in result.supports)]
        return self._report(
            "convolution",
            {"n": n, "m": m, "k": k, "d": d, "a": a, "b": b},
            witnesses,
            notes,
        )

    # ------------------------------------------------------------------
    # Zero weight spaces
    # ------------------------------------------------------------------

    def zero_weight(self, n: int, d: int) -> VerificationReport:
        if n < 1 or d < 1:
            raise ShapeMismatchError(
                f"zero weight checks need n, d >= 1, got n={n}, d={d}"
            )
        bridge = tm.zero_weight_bridge(n, d, self.budget)
        witnesses = [
            _w("unit column sum monomials = words", len(bridge.pairs), n**d),
            _w(
                "bridge intertwines gl_n",
                sum(bridge.gl_checks.values()),
                len(bridge.gl_checks),
            ),
            _w(
                "bridge turns column swaps into place permutations",
                sum(bridge.permutation_checks.values()),
                len(bridge.permutation_checks),
            ),
        ]
        if d**d <= self.budget:
            classes = tm.character_classes(d)
            for lam in comb.enumerate_partitions(d):
                character = tm.weyl_group_action_on_zero_weight(lam, d, self.budget)
                expected = [comb.sym_character(lam, rho) for rho in classes]
                witnesses.append(
                    _w(
                        f"zero weight character of V_{lam} = chi^{lam}",
                        str(character.values),
                        str(expected),
                    )
                )
                witnesses.append(
                    _w(
                        f"zero weight dimension of V_{lam} = K_(lambda,1^d)",
                        character.dimension,
                        comb.kostka(lam, (1,) * d),
                    )
                )
        if comb.binomial(d * d + d - 1, d) <= self.budget:
            witnesses.append(
                _w(
                    "double zero weight monomials = d!",
                    len(tm.double_zero_weight_basis(d, self.budget)),
                    comb.factorial_of(d),
                )
            )
        return self._report("zero-weight", {"n": n, "d": d}, witnesses)

    # ------------------------------------------------------------------
    # Ginzburg's surjection onto the Schur algebra
    # ------------------------------------------------------------------

    def ginzburg(self, n: int, d: int) -> VerificationReport:
        algebra = schur.build_schur_algebra(n, d, self.budget)
        closure = schur.verify_ginzburg_surjection(n, d, self.budget)
        squares = sum(v**2 for v in schur.simple_module_dims(n, d).values())
        witnesses = [
            _w(
                "dim S(n,d) = binomial(n^2+d-1, d)",
                algebra.dim,
                comb.binomial(n * n + d - 1, d),
            ),
            _w("closure of gl_n images = dim S(n,d)", closure.dimension, algebra.dim),
            _w("dim S(n,d) = sum dim(V_lambda)^2", algebra.dim, squares),
            _w(
                "xi_A commute with place permutations",
                schur.equivariance_failures(algebra, self.budget),
                0,
            ),
            _w(
                "xi_A are linearly independent", schur.xi_span_dim(algebra), algebra.dim
            ),
            _w(
                "commutant dimension = dim S(n,d)",
                schur.tensor_commutant_dim(n, d, self.budget),
                algebra.dim,
            ),
            _w(
                "sum of diagonal xi_D is the identity",
                int(schur.unit_is_identity(algebra)),
                1,
            ),
            _w(
                "anti-involution A -> A^T reverses products",
                schur.anti_involution_failures(algebra),
                0,
            ),
            _w(
                "table matches matrix products",
                schur.structure_constant_failures(algebra, STRUCTURE_CONSTANT_PAIRS),
                0,
            ),
        ]
        notes = ["closure trajectory: " + ",".join(map(str, closure.trajectory))]
        if algebra.dim**2 > STRUCTURE_CONSTANT_PAIRS:
            notes.append(
                "structure constants compared on the first "
                f"{STRUCTURE_CONSTANT_PAIRS} of {algebra.dim**2} pairs"
            )
        if algebra.dim <= EXHAUSTIVE_ALGEBRA_DIM:
            witnesses.append(
                _w(
                    "multiplication is associative",
                    schur.algebra_associativity_failures(algebra),
                    0,
                )
            )
        else:
            rng = self.rng()
            triples = [
                tuple(int(v) for v in rng.integers(0, algebra.dim, size=3))
                for _ in range(200)
            ]
            basis = schur.basis_coordinates(n, n, d)
            failures = sum(
                schur.associativity_failures(
                    [basis[i]], [basis[j]], [basis[c]], (n, n, n, n), d
                )
                for i, j, c in triples
            )
            witnesses.append(
                _w("multiplication is associative on 200 random triples", failures, 0)
            )
        return self._report("ginzburg", {"n": n, "d": d}, witnesses, notes)


def _first(shape: Partition) -> int:
    return shape.parts[0] if shape.parts else 0


def _run_suite(
    args: tuple[str, dict[str, int | None], int, int, int]
) -> VerificationReport:
    suite, params, budget, seed, samples = args
    verifier = DualityVerifier(budget=budget, seed=seed, group_samples=samples)
    return verifier.run(suite, **params)


def verify_all(verifier: DualityVerifier, workers: int = 1) -> ReportBundle:
    """Run every suite at its default parameters, optionally in a process pool."""
    jobs = [
        (
            suite,
            DEFAULT_PARAMETERS[suite],
            verifier.budget,
            verifier.seed,
            verifier.group_samples,
        )
        for suite in SUITES
    ]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(_run_suite, jobs))
    else:
        reports = [_run_suite(job) for job in jobs]
    return ReportBundle(reports=reports)

