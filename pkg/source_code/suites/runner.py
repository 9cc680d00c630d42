"""
Suite Runner Module

This module maps suite names to the library checks, runs them in request
order and assembles the report.
"""

import itertools
import logging
import time
from typing import Callable, Dict, List, Optional

from models.check import CheckReport
from models.config import SUITE_NAMES, Config
from models.report import Report, SuiteResult
from utils.errors import ConfigError, InconsistentCentralCharge, InsufficientOrder

logger = logging.getLogger(__name__)


class SuiteRunner:
    """
    Runner for the verification suites of one configuration.
    """

    def __init__(self, config: Config):
        """
        Initialize the runner.

        Args:
            config: Validated configuration

        Raises:
            ConfigError: If the configuration does not validate
        """
        is_valid, message = config.validate()
        if not is_valid:
            raise ConfigError(message)
        self.config = config
        self.spec = config.build_spec()
        self.series_spec = config.build_series_spec()
        self.max_weight = config.get_value("max_weight")
        self._engine = None
        self._model = None
        self._suites: Dict[str, Callable[[SuiteResult], None]] = {
            "algebra": self._run_algebra,
            "vacuum": self._run_vacuum,
            "vertex": self._run_vertex,
            "virasoro": self._run_virasoro,
            "deformed": self._run_deformed,
            "filtration": self._run_filtration,
            "ybe": self._run_ybe,
        }

    @property
    def engine(self):
        if self._engine is None:
            from vertex import VertexEngine

            self._engine = VertexEngine(self.spec)
        return self._engine

    @property
    def model(self):
        if self._model is None:
            from deformation import DressedModel

            self._model = DressedModel(self.series_spec)
        return self._model

    def run(self, names: Optional[List[str]] = None) -> Report:
        """
        Run suites in the given order.

        Args:
            names: Suite names, defaults to the configured suites

        Returns:
            Report: One SuiteResult per suite

        Raises:
            ConfigError: For an unknown suite name
        """
        names = self.config.suites if names is None else list(names)
        unknown = [name for name in names if name not in self._suites]
        if unknown:
            raise ConfigError(f"Unknown suites: {', '.join(unknown)}; choose from {', '.join(SUITE_NAMES)}")

        report = Report(config=self.config.to_dict())
        for name in names:
            logger.info(f"Running suite {name}")
            result = SuiteResult(name)
            start = time.perf_counter()
            try:
                self._suites[name](result)
            except InsufficientOrder as e:
                logger.warning(f"Suite {name} stopped: {e}")
                stopped = CheckReport("truncation-order")
                stopped.record_inconclusive(str(e))
                result.add(stopped)
                result.details["required_order"] = e.required
            result.wall_time = time.perf_counter() - start
            logger.info(f"Suite {name}: {result.status} in {result.wall_time:.2f}s")
            report.suites.append(result)
        return report

    def _run_algebra(self, result: SuiteResult) -> None:
        from qalgebra import (
            QAlgebra,
            associativity_check,
            confluence_check,
            pbw_count_check,
            smash_relation_check,
            twist_check,
        )

        samples = self.config.get_value("samples")
        seed = self.config.get_value("seed")
        max_len = self.config.get_value("max_len")
        algebra = QAlgebra(self.spec)
        result.add(confluence_check(algebra, samples, seed))
        result.add(associativity_check(algebra, samples, seed))
        result.add(pbw_count_check(self.spec, max_len=max_len))
        result.add(twist_check(self.spec, max_len + 1))
        if self.spec.l >= 2:
            result.add(smash_relation_check(self.spec))

    def _run_vacuum(self, result: SuiteResult) -> None:
        from vacuum import character_check

        module = self.engine.module
        character = result.add(character_check(module, self.max_weight))
        result.details["graded_dims"] = character.details["graded_dims"]
        result.add(module.relations_on_basis_check(self.max_weight))
        result.add(module.action_routes_check(self.max_weight))
        result.add(module.cyclicity_check(self.max_weight))

    def _run_vertex(self, result: SuiteResult) -> None:
        from vacuum import State
        from vertex import (
            creation_check,
            derivation_check,
            generator_states,
            random_mode_product_check,
            sjacobi_check,
            slocality_witness,
            truncation_check,
            weak_assoc_check,
            weight_check,
        )

        engine = self.engine
        radius = self.config.get_value("box_radius")
        mode_radius = self.config.get_value("mode_radius")
        modes = range(-mode_radius, mode_radius + 1)
        words = engine.module.enumerate_basis(self.max_weight)
        basis = [State.basis(word) for word in words]
        generators = generator_states(engine)

        creation = CheckReport("creation")
        structure = CheckReport("truncation-weight-derivation")
        for v in basis:
            creation.merge(creation_check(engine, v, mode_radius + 1))
        for a, b in itertools.product(generators, basis):
            structure.merge(truncation_check(engine, a, b))
            structure.merge(weight_check(engine, a, b, modes))
            structure.merge(derivation_check(engine, a, b, modes))
        result.add(creation)
        result.add(structure)

        locality = CheckReport("s-locality")
        associativity = CheckReport("weak-associativity")
        jacobi = CheckReport("s-jacobi")
        for u, v in itertools.product(generators, repeat=2):
            locality.merge(slocality_witness(engine, u, v, basis, radius))
            for w in basis:
                associativity.merge(weak_assoc_check(engine, u, v, w, radius))
                jacobi.merge(sjacobi_check(engine, u, v, w, radius))
        result.add(locality)
        result.add(associativity)
        result.add(jacobi)
        result.add(
            random_mode_product_check(
                engine, words, self.config.get_value("samples"), self.config.get_value("seed")
            )
        )

    def _run_virasoro(self, result: SuiteResult) -> None:
        from arith import format_scalar
        from vertex import virasoro_check

        try:
            virasoro = virasoro_check(
                self.spec, self.config.get_value("mode_radius"), self.max_weight, self.engine
            )
        except InconsistentCentralCharge as e:
            failed = CheckReport("virasoro")
            failed.record(False, str(e))
            result.add(failed)
            return
        result.add(virasoro.to_check_report())
        result.details["central_charge"] = format_scalar(virasoro.central_charge)

    def _run_deformed(self, result: SuiteResult) -> None:
        from deformation import commutativity_check, inverse_check, pseudo_law_check, zf_check_all

        model = self.model
        spec = self.series_spec
        colors = range(1, spec.l + 1)
        for color in colors:
            result.add(pseudo_law_check(model.engine, spec, color, self.max_weight))
            result.add(pseudo_law_check(model.engine, spec, color, self.max_weight, inverse=True))
            result.add(inverse_check(model.engine, spec, color, self.max_weight))
        for i, j in itertools.combinations_with_replacement(colors, 2):
            result.add(commutativity_check(model.engine, spec, i, j, self.max_weight))
        result.add(zf_check_all(model, self.config.get_value("box_radius"), self.max_weight))

    def _run_filtration(self, result: SuiteResult) -> None:
        from deformation import filtration_E_check, gr_compare, half_basis_check

        gr = result.add(gr_compare(self.model, self.max_weight))
        result.details["gr_table"] = gr.details["table"]
        result.add(
            filtration_E_check(
                self.spec,
                self.max_weight,
                self.config.get_value("samples"),
                self.config.get_value("seed"),
                self.engine,
            )
        )
        if self.config.get_value("half_subalgebra"):
            result.add(half_basis_check(self.model, self.max_weight))

    def _run_ybe(self, result: SuiteResult) -> None:
        from qyb import build_S, qybe_check, unitarity_check

        operator = build_S(self.series_spec)
        result.add(unitarity_check(operator))
        result.add(qybe_check(operator, radius=self.config.get_value("box_radius")))
        result.details["entries"] = operator.to_dict()


def run_suites(config: Config, names: Optional[List[str]] = None) -> Report:
    """Module-level shortcut for `SuiteRunner.run`."""
    return SuiteRunner(config).run(names)
