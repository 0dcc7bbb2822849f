from itertools import combinations
from typing import List, Sequence
import networkx as nx
import numpy as np
from pentaflip import hyperbolic
from pentaflip.gamma import RelationKind, canonical_generator, orbit, pentagon_cycle_word
from pentaflip.korepanov import area_map_check, inverse_2x2, non_involution_witness, pentagon_matrices, \
    product, quad_matrix, identity_report, verify_matrix_pentagon, word_matrices, zeta, RFMatrix
from pentaflip.polygon import DEFAULT_MAX_N, catalan, fan_triangulation, flip_graph, sorted_states
from pentaflip.ptolemy_action import check_relations, check_path_independence, fresh_labelling, \
    pentagon_fan_state, random_laurent_walk, verify_lemma1
from pentaflip.symexpr.parser import parse_expr
from pentaflip.symexpr.rational import ONE
from pentaflip.verification.check import ICheck, ICheckSuite
from pentaflip.verification.logger import Logger, LogLevel


class PentagonCycleChecks(ICheckSuite):
    class _FiveFlipIdentity(ICheck):
        def run(self, logger: Logger) -> None:
            report = verify_lemma1()
            for step in report.steps:
                logger.debug(step.to_string())
            logger.expect(report.identity(), "Five flips return the labelled pentagon fan to itself")

        def name(self) -> str:
            return "PentagonCycleChecks.five_flip_identity"

    class _IntermediateLabels(ICheck):
        def run(self, logger: Logger) -> None:
            steps = verify_lemma1().steps
            z = parse_expr("(x*d + c*e)/y")
            expected = [
                ("3-5", z),
                ("2-5", (parse_expr("a") * z + parse_expr("b*e")) / parse_expr("x")),
            ]
            for step, (edge, label) in zip(steps, expected):
                assert step.added is not None and step.label is not None
                logger.expect(step.added.key() == edge and step.label == label,
                              "Step %d puts %s on %s" % (step.step, step.label.to_string(), step.added.key()))
            produced = [step.added.key() for step in steps if step.added is not None]
            logger.expect(produced == ["3-5", "2-5", "2-4", "1-4", "1-3"],
                          "Diagonals produced in turn: %s" % ", ".join(produced))

        def name(self) -> str:
            return "PentagonCycleChecks.intermediate_labels"

    def checks(self) -> List[ICheck]:
        return [self._FiveFlipIdentity(), self._IntermediateLabels()]


class FlipGraphChecks(ICheckSuite):
    def __init__(self, sizes: Sequence[int], max_n: int = DEFAULT_MAX_N) -> None:
        self.sizes = sizes
        self.max_n = max_n

    class _CountsCheck(ICheck):
        def __init__(self, n: int, max_n: int) -> None:
            self.n = n
            self.max_n = max_n

        def run(self, logger: Logger) -> None:
            graph = flip_graph(self.n, self.max_n)
            logger.record("vertices", graph.number_of_nodes())
            logger.record("edges", graph.number_of_edges())
            logger.expect(graph.number_of_nodes() == catalan(self.n - 2),
                          "%d triangulations, Catalan number %d" % (graph.number_of_nodes(), catalan(self.n - 2)))
            degrees = set(d for _, d in graph.degree())
            logger.expect(degrees == {self.n - 3}, "Every triangulation has degree %d" % (self.n - 3))
            logger.expect(nx.is_connected(graph), "Flip graph is connected")

        def name(self) -> str:
            return "FlipGraphChecks.counts: n=%d" % self.n

    def checks(self) -> List[ICheck]:
        return [self._CountsCheck(n, self.max_n) for n in self.sizes]


class GammaRelationChecks(ICheckSuite):
    def __init__(self, sizes: Sequence[int], max_n: int = DEFAULT_MAX_N) -> None:
        self.sizes = sizes
        self.max_n = max_n

    class _RelationCheck(ICheck):
        def __init__(self, n: int, kind: RelationKind, max_n: int) -> None:
            self.n = n
            self.kind = kind
            self.max_n = max_n

        def run(self, logger: Logger) -> None:
            reports = check_relations(self.n, self.kind, self.max_n)
            vacuous = 0
            for report in reports:
                if report.vacuous():
                    vacuous += 1
                    logger.log(LogLevel.VACUOUS, "%s has no admissible state" % report.instance.name())
                elif not report.holds():
                    logger.error("%s fails on %s" % (report.instance.name(), ", ".join(report.failures)))
                else:
                    logger.debug("%s holds on %d states" % (report.instance.name(), report.admissible))
            logger.record("instances", len(reports))
            logger.record("vacuous", vacuous)
            logger.record("admissible_pairs", sum(r.admissible for r in reports))
            if vacuous < len(reports):
                logger.info("%d of %d instances checked on admissible states" % (len(reports) - vacuous, len(reports)))

        def name(self) -> str:
            return "GammaRelationChecks.%s: n=%d" % (self.kind.to_string(), self.n)

    class _OrbitCheck(ICheck):
        def __init__(self, n: int) -> None:
            self.n = n

        def run(self, logger: Logger) -> None:
            for quad in combinations(range(1, self.n + 1), 4):
                classes = set()
                for arrangement in orbit(*quad):
                    if canonical_generator(*arrangement) != canonical_generator(*quad):
                        logger.error("d(%d,%d,%d,%d) leaves the orbit of d(%d,%d,%d,%d)" % (arrangement + quad))
                a, b, c, d = quad
                for start in ((a, b, c, d), (a, b, d, c), (a, c, b, d)):
                    classes.add(canonical_generator(*start))
                if len(classes) != 3:
                    logger.error("Quadruple %s has %d symmetry classes instead of 3" % (quad, len(classes)))
            logger.info("Index-symmetry orbits canonicalize consistently for n=%d" % self.n)

        def name(self) -> str:
            return "GammaRelationChecks.orbits: n=%d" % self.n

    def checks(self) -> List[ICheck]:
        result: List[ICheck] = []
        for n in self.sizes:
            result.append(self._OrbitCheck(n))
            for kind in (RelationKind.INVOLUTION, RelationKind.FAR_COMM, RelationKind.PENTAGON,
                         RelationKind.SYMMETRY):
                if kind == RelationKind.PENTAGON and n < 5:
                    continue
                result.append(self._RelationCheck(n, kind, self.max_n))
        return result


class MatrixPentagonChecks(ICheckSuite):
    class _TranscribedProduct(ICheck):
        def run(self, logger: Logger) -> None:
            report = verify_matrix_pentagon()
            logger.expect(report.identity, "Product of the five 3x3 factors is I3")
            for row, col, value in report.residual_entries:
                logger.error("Residual at (%d,%d): %s" % (row, col, value.to_string()))
            truncated = identity_report(product(pentagon_matrices()[:4]))
            logger.expect(not truncated.identity, "Dropping the last factor leaves a nonidentity product")

        def name(self) -> str:
            return "MatrixPentagonChecks.transcribed_product"

    class _GeneratedFactors(ICheck):
        def run(self, logger: Logger) -> None:
            generated = word_matrices(fan_triangulation(5, 1), pentagon_cycle_word())
            transcribed = pentagon_matrices()
            for i, (mine, theirs) in enumerate(zip(generated, transcribed), start=1):
                logger.expect(mine == theirs, "Generated factor %d matches the transcribed factor" % i)
            logger.expect(verify_matrix_pentagon(generated).identity, "Generated factors multiply to I3")

        def name(self) -> str:
            return "MatrixPentagonChecks.generated_factors"

    class _ColumnSums(ICheck):
        def run(self, logger: Logger) -> None:
            m = quad_matrix(zeta(1), zeta(2), zeta(3), zeta(4))
            logger.expect(area_map_check(m), "Flip matrix columns sum to 1")
            logger.expect(area_map_check(inverse_2x2(m)), "Inverse flip matrix columns sum to 1")
            for i, factor in enumerate(pentagon_matrices(), start=1):
                logger.expect(all(s == ONE for s in factor.column_sums()), "Factor %d columns sum to 1" % i)

        def name(self) -> str:
            return "MatrixPentagonChecks.column_sums"

    class _InverseClosedForm(ICheck):
        def run(self, logger: Logger) -> None:
            a, b = parse_expr("a"), parse_expr("b")
            m = RFMatrix.of([[a, b], [1 - a, 1 - b]])
            expected = RFMatrix.of([[parse_expr("(1-b)/(a-b)"), parse_expr("-b/(a-b)")],
                                    [parse_expr("(a-1)/(a-b)"), parse_expr("a/(a-b)")]])
            logger.expect(inverse_2x2(m) == expected, "Inverse of [[a,b],[1-a,1-b]] has the closed form")
            logger.expect((m @ inverse_2x2(m)).is_identity(), "M times its inverse is I2")

        def name(self) -> str:
            return "MatrixPentagonChecks.inverse_closed_form"

    class _NonInvolution(ICheck):
        def run(self, logger: Logger) -> None:
            witness = non_involution_witness()
            if witness is None:
                logger.error("No assignment found with a flip matrix squaring to something other than I2")
                return
            logger.info("Flip matrix is not an involution at %s" % ", ".join(
                "%s=%s" % (name, value) for name, value in witness.assignment))

        def name(self) -> str:
            return "MatrixPentagonChecks.non_involution"

    def checks(self) -> List[ICheck]:
        return [self._TranscribedProduct(), self._GeneratedFactors(), self._ColumnSums(),
                self._InverseClosedForm(), self._NonInvolution()]


class LaurentChecks(ICheckSuite):
    def __init__(self, n: int, length: int, trials: int, seed: int) -> None:
        self.n = n
        self.length = length
        self.trials = trials
        self.seed = seed

    class _RandomWalks(ICheck):
        def __init__(self, n: int, length: int, trials: int, seed: int) -> None:
            self.n = n
            self.length = length
            self.trials = trials
            self.seed = seed

        def run(self, logger: Logger) -> None:
            rng = np.random.default_rng(self.seed)
            checked = 0
            for trial in range(self.trials):
                walk_length = int(rng.integers(min(1, self.length), self.length + 1))
                report = random_laurent_walk(self.n, walk_length, rng)
                checked += report.labels_checked
                for step, edge, label in report.non_laurent:
                    logger.error("Walk %d step %d: label %s on %s is not Laurent (%s)" % (
                        trial, step, label, edge, report.word.to_string()))
            logger.record("labels_checked", checked)
            logger.info("%d labels over %d walks have monomial denominators" % (checked, self.trials))

        def name(self) -> str:
            return "LaurentChecks.random_walks: n=%d len<=%d trials=%d seed=%d" % (
                self.n, self.length, self.trials, self.seed)

    def checks(self) -> List[ICheck]:
        return [self._RandomWalks(self.n, self.length, self.trials, self.seed)]


class OracleCrosscheckChecks(ICheckSuite):
    def __init__(self, trials: int, seed: int, residual: bool = True, crosscheck: bool = True) -> None:
        self.trials = trials
        self.seed = seed
        self.residual = residual
        self.crosscheck = crosscheck

    class _PtolemyResidual(ICheck):
        def __init__(self, trials: int, seed: int) -> None:
            self.trials = trials
            self.seed = seed

        def run(self, logger: Logger) -> None:
            rng = np.random.default_rng([self.seed, 1])
            state = fresh_labelling(fan_triangulation(4, 1))
            worst_residual = 0.0
            worst_roundtrip = 0.0
            for _ in range(self.trials):
                assignment = hyperbolic.random_assignment(state, rng)
                polygon = hyperbolic.realize_labelled_triangulation(state, assignment)
                worst_residual = max(worst_residual, hyperbolic.ptolemy_residual(polygon, (1, 2, 3, 4)))
                worst_roundtrip = max(worst_roundtrip, hyperbolic.roundtrip_error(polygon, state, assignment))
            logger.record("max_ptolemy_residual", worst_residual)
            logger.record("max_roundtrip_error", worst_roundtrip)
            logger.expect(worst_residual < hyperbolic.GEOMETRY_TOLERANCE,
                          "Max Ptolemy residual %.3e over %d quadrilaterals" % (worst_residual, self.trials))
            logger.expect(worst_roundtrip < hyperbolic.GEOMETRY_TOLERANCE,
                          "Max realization round-trip error %.3e" % worst_roundtrip)

        def name(self) -> str:
            return "OracleCrosscheckChecks.ptolemy_residual: trials=%d seed=%d" % (self.trials, self.seed)

    class _FiveFlipCrosscheck(ICheck):
        def __init__(self, trials: int, seed: int) -> None:
            self.trials = trials
            self.seed = seed

        def run(self, logger: Logger) -> None:
            rng = np.random.default_rng([self.seed, 2])
            state = pentagon_fan_state()
            worst = 0.0
            for _ in range(self.trials):
                report = hyperbolic.crosscheck_lemma(hyperbolic.random_assignment(state, rng))
                worst = max(worst, report.max_error())
            logger.record("max_relative_error", worst)
            logger.expect(worst < hyperbolic.CROSSCHECK_TOLERANCE,
                          "Symbolic flip labels match measured lambda lengths, max error %.3e" % worst)

        def name(self) -> str:
            return "OracleCrosscheckChecks.five_flip_crosscheck: trials=%d seed=%d" % (self.trials, self.seed)

    class _HorocycleRescaling(ICheck):
        def __init__(self, seed: int) -> None:
            self.seed = seed

        def run(self, logger: Logger) -> None:
            rng = np.random.default_rng([self.seed, 3])
            state = fresh_labelling(fan_triangulation(5, 1))
            polygon = hyperbolic.realize_labelled_triangulation(state, hyperbolic.random_assignment(state, rng))
            s = hyperbolic.random_lengths(rng, 1)[0]
            rescaled = hyperbolic.rescale_horocycle(polygon, 3, s)
            worst = 0.0
            for other in (1, 2, 4, 5):
                expected = hyperbolic.lambda_length(polygon, 3, other) / s
                worst = max(worst, hyperbolic.relative_error(hyperbolic.lambda_length(rescaled, 3, other), expected))
            logger.expect(worst < hyperbolic.GEOMETRY_TOLERANCE,
                          "Scaling the horocycle at 3 by s^2 divides its lambda lengths by s")
            logger.expect(hyperbolic.max_ptolemy_residual(rescaled) < hyperbolic.GEOMETRY_TOLERANCE,
                          "Ptolemy holds after rescaling")

        def name(self) -> str:
            return "OracleCrosscheckChecks.horocycle_rescaling: seed=%d" % self.seed

    def checks(self) -> List[ICheck]:
        result: List[ICheck] = []
        if self.residual:
            result += [self._PtolemyResidual(self.trials, self.seed), self._HorocycleRescaling(self.seed)]
        if self.crosscheck:
            result.append(self._FiveFlipCrosscheck(self.trials, self.seed))
        return result


class PathIndependenceChecks(ICheckSuite):
    def __init__(self, sizes: Sequence[int], max_n: int = DEFAULT_MAX_N) -> None:
        self.sizes = sizes
        self.max_n = max_n

    class _TransportCheck(ICheck):
        def __init__(self, n: int, max_n: int) -> None:
            self.n = n
            self.max_n = max_n

        def run(self, logger: Logger) -> None:
            state = fresh_labelling(fan_triangulation(self.n, 1))
            targets = sorted_states(flip_graph(self.n, self.max_n))
            for target in targets:
                report = check_path_independence(state, target, max_n=self.max_n)
                if not report.equal:
                    logger.error("Labels on %s depend on the flip path" % target.key())
            logger.record("targets", len(targets))
            logger.info("Labels transported to %d triangulations agree along two paths" % len(targets))

        def name(self) -> str:
            return "PathIndependenceChecks.transport: n=%d" % self.n

    def checks(self) -> List[ICheck]:
        return [self._TransportCheck(n, self.max_n) for n in self.sizes]
