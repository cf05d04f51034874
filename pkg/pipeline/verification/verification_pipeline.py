import logging
import math
import os
import traceback
from concurrent.futures import ThreadPoolExecutor
from functools import cached_property
from typing import Any, Callable, Dict, List, Optional, Tuple

import numpy as np

from document_generator.verification_report import generate_verification_report
from pipeline.base import Pipeline
from schemas import CheckResult, VerificationReport, VerifyOptions
from toric.geometry2d import (PLANE, STANDARD_LATTICE, chamber_complex, creeping_monotone,
                              hilbert_basis, hilbert_refinement, is_unimodular, lift_weight,
                              triangulation_for_weight)
from toric.graver import GraverBasis, graver_basis, stable_box_oracle
from toric.groebner import GroebnerFan2, TermOrder, buchberger, groebner_fan
from toric.hilbert_scheme import (FAKE, TRUE, Flip, coherence_witness, exhaustive_ideal_oracle,
                                  default_oracle_bounds, flip_graph, flips, localization_facts,
                                  monomial_ideal_for_cone, special_simplex, tangent_dimension,
                                  wall_coherence_witness)
from toric.ideals import MonomialIdeal, delta_chamber, localize, minimal_primes
from toric.intlinalg import GaleLattice, gale_lattice_basis, saturation_index

logger = logging.getLogger("verification_pipeline")


def _one_based(indices) -> List[int]:
    return [i + 1 for i in sorted(indices)]


class VerificationPipeline(Pipeline):
    """
    Runs the finite checklist behind smoothness and irreducibility of the
    toric Hilbert scheme of a rank two lattice
    """
    def __init__(self, lattice: GaleLattice, options: Optional[VerifyOptions] = None):
        super().__init__(lattice)
        self.options = options or VerifyOptions()
        self._flip_cache: Dict[int, List[Flip]] = {}

        # Define the available building blocks
        self.building_blocks = {
            "graver_oracle": {
                "name": "Graver basis",
                "ref": "completion agrees with the stabilized box oracle",
            },
            "groebner_in_graver": {
                "name": "Reduced Groebner bases",
                "ref": "every reduced Groebner basis element is a Graver binomial",
            },
            "fan_refinement": {
                "name": "Groebner fan",
                "ref": "fan rays equal the Hilbert refinement of the chamber complex",
            },
            "unimodular_cones": {
                "name": "Unimodular cones",
                "ref": "every maximal Groebner cone is unimodular",
            },
            "creeping": {
                "name": "Creeping monotonicity",
                "ref": "along a chamber's Hilbert basis the products with the normals move monotonically",
            },
            "chamber_correspondence": {
                "name": "Chamber correspondence",
                "ref": "minimal primes of an ideal are the simplices containing its cone",
            },
            "localizations": {
                "name": "Localizations",
                "ref": "localizations at minimal primes are weakly graded, artinian and coherent",
            },
            "coherence": {
                "name": "Coherence witnesses",
                "ref": "pure powers of the special localization give a weight realizing the ideal",
            },
            "forced_reconstruction": {
                "name": "Forced ideals",
                "ref": "each ideal is the forced ideal of its special localization",
            },
            "distinct_localizations": {
                "name": "Distinct special localizations",
                "ref": "distinct ideals have distinct special localizations",
            },
            "oracle": {
                "name": "Exhaustive enumeration",
                "ref": "every monomial L-graded ideal is an initial ideal",
            },
            "two_flips": {
                "name": "Two flips",
                "ref": "every monomial L-graded ideal has exactly two flips",
            },
            "tangent": {
                "name": "Tangent spaces",
                "ref": "the degree zero tangent space has dimension equal to the number of flips",
            },
            "wall_coherence": {
                "name": "Wall ideals",
                "ref": "the wall ideal of two adjacent ideals is an initial ideal",
            },
            "wall_normals": {
                "name": "Wall normals",
                "ref": "flip binomials localize to a minimal generator and a standard monomial",
            },
            "flip_graph": {
                "name": "Flip graph",
                "ref": "flips connect exactly the ideals of adjacent fan cones",
            },
        }

    @cached_property
    def graver(self) -> GraverBasis:
        return graver_basis(self.lattice)

    @cached_property
    def fan(self) -> GroebnerFan2:
        return groebner_fan(self.lattice, self.graver, jobs=self.options.jobs)

    @property
    def ideals(self) -> List[MonomialIdeal]:
        return self.fan.ideals

    @cached_property
    def oracle_bounds(self) -> Tuple[int, int]:
        degree_bound, margin = default_oracle_bounds(self.graver)
        return self.options.degree_bound or degree_bound, self.options.margin or margin

    def flips_of(self, k: int) -> List[Flip]:
        if k not in self._flip_cache:
            self._flip_cache[k] = flips(self.ideals[k], self.lattice, self.graver, self.fan,
                                        cap=self.options.search_cap)
        return self._flip_cache[k]

    def _per_ideal(self, fn: Callable[[int], Any]) -> List[Any]:
        indices = range(len(self.ideals))
        if self.options.jobs > 1:
            with ThreadPoolExecutor(max_workers=self.options.jobs) as pool:
                return list(pool.map(fn, indices))
        return [fn(k) for k in indices]

    def parameters(self) -> Dict[str, Any]:
        degree_bound, margin = self.oracle_bounds
        return {
            "n": self.lattice.n,
            "degree_bound": degree_bound,
            "margin": margin,
            "search_cap": self.options.search_cap,
            "seed": self.options.seed,
            "fan_lattice": "Z^2",
            "saturation_index": saturation_index(self.lattice),
        }

    def _run_pipeline_steps(self, selected_blocks: Optional[List[str]] = None) -> VerificationReport:
        """
        Run the selected checks; a check that raises is recorded as failed

        Args:
            selected_blocks: Optional list of building block IDs; all blocks if None
        """
        blocks_to_process = selected_blocks if selected_blocks else list(self.building_blocks.keys())
        valid_blocks = [b for b in blocks_to_process if b in self.building_blocks]
        for b in blocks_to_process:
            if b not in self.building_blocks:
                logger.warning(f"unknown check {b} ignored")

        checks = []
        for block_id in valid_blocks:
            block = self.building_blocks[block_id]
            logger.info(f"running check {block_id}")
            try:
                passed, witness = getattr(self, f"_check_{block_id}")()
            except Exception as e:
                logger.error(f"check {block_id} raised {type(e).__name__}: {str(e)}")
                logger.error(traceback.format_exc())
                passed, witness = False, {"error": f"{type(e).__name__}: {e}"}
            if not passed:
                logger.error(f"check {block_id} failed")
            checks.append(CheckResult(name=block["name"], ref=block["ref"], passed=passed, witness=witness))

        return VerificationReport(
            name=self.lattice.name,
            parameters=self.parameters(),
            checks=checks,
            overall=all(c.passed for c in checks),
        )

    def _generate_report(self, report: VerificationReport, pdf_path: Optional[str] = None) -> Optional[str]:
        if os.path.dirname(pdf_path or ""):
            os.makedirs(os.path.dirname(pdf_path), exist_ok=True)
        return generate_verification_report(report, pdf_path)

    # The checks. Each returns (passed, witness).

    def _check_graver_oracle(self):
        oracle, radius = stable_box_oracle(self.lattice)
        return oracle == self.graver, {"elements": len(self.graver), "radius": radius}

    def _check_groebner_in_graver(self):
        rng = np.random.default_rng(self.options.seed)
        weights, bad = [], []
        for _ in range(self.options.random_weights):
            w = tuple(int(x) for x in rng.integers(0, 10, size=self.lattice.n))
            weights.append(list(w))
            basis = buchberger(list(self.graver), TermOrder(w))
            bad.extend(list(v) for v in basis.vectors() if v not in self.graver)
        return not bad, {"weights": weights, "outside": bad}

    def _check_fan_refinement(self):
        rays = set(self.fan.rays)
        by_lattice = {
            "Z^2": set(hilbert_refinement(self.lattice, STANDARD_LATTICE)),
            "ZB": set(hilbert_refinement(self.lattice, gale_lattice_basis(self.lattice))),
        }
        matching = [name for name, refined in by_lattice.items() if refined == rays]
        return "Z^2" in matching, {"matching_lattices": matching, "merged_sectors": self.fan.merged}

    def _check_unimodular_cones(self):
        bad = [k for k in range(len(self.fan.cones)) if not is_unimodular(self.fan.cone(k))]
        return not bad, {"non_unimodular": bad}

    def _check_creeping(self):
        bad = []
        for chamber in chamber_complex(self.lattice).chambers:
            basis = hilbert_basis(chamber.cone)
            if not creeping_monotone(chamber.cone, basis):
                bad.append(_one_based(chamber.pair))
        return not bad, {"failing_chambers": bad}

    def _check_chamber_correspondence(self):
        cc = chamber_complex(self.lattice)

        def check(k):
            I, cone = self.ideals[k], self.fan.cone(k)
            chamber = delta_chamber(I, self.lattice)
            w = lift_weight(self.lattice, cone.interior_point())
            delta = minimal_primes(I)
            return cc.chambers[cc.chamber_index(cone)] == chamber and delta == triangulation_for_weight(self.lattice, w)

        bad = [k for k, ok in enumerate(self._per_ideal(check)) if not ok]
        return not bad, {"failing_cones": bad}

    def _check_localizations(self):
        n = self.lattice.n

        def check(k):
            I = self.ideals[k]
            out = []
            for sigma in sorted(minimal_primes(I), key=sorted):
                facts = localization_facts(I, sigma, self.lattice, self.graver)
                if len(sigma) != n - 2 or not facts.holds:
                    out.append({"cone": k, "sigma": _one_based(sigma)})
            return out

        bad = [entry for entries in self._per_ideal(check) for entry in entries]
        return not bad, {"failing": bad}

    def _check_coherence(self):
        def witness(k):
            sigma, i, j = special_simplex(self.ideals[k], self.lattice)
            w = coherence_witness(self.ideals[k], self.lattice, self.graver)
            return {"sigma": _one_based(sigma), "pair": [i + 1, j + 1], "w": list(w)}

        return True, self._per_ideal(witness)

    def _check_forced_reconstruction(self):
        bad = [k for k, I in enumerate(self.ideals)
               if monomial_ideal_for_cone(self.fan, k, self.lattice, self.graver) != I]
        return not bad, {"failing_cones": bad}

    def _check_distinct_localizations(self):
        tops = []
        for I in self.ideals:
            sigma, _, _ = special_simplex(I, self.lattice)
            tops.append((sigma, localize(I, sigma)))
        return len(set(tops)) == len(tops), {"ideals": len(tops)}

    def _check_oracle(self):
        degree_bound, margin = self.oracle_bounds
        monomials = math.comb(degree_bound + self.lattice.n, self.lattice.n)
        if len(self.graver) > self.options.oracle_max_graver or monomials > self.options.oracle_max_monomials:
            logger.warning(f"oracle skipped: {len(self.graver)} Graver elements, {monomials} monomials")
            return True, {"skipped": True, "graver": len(self.graver), "monomials": monomials}
        found = exhaustive_ideal_oracle(self.lattice, self.graver, degree_bound, margin,
                                        max_graver=self.options.oracle_max_graver, cap=self.options.search_cap)
        return set(found) == set(self.ideals), {"skipped": False, "oracle": len(found), "fan": len(self.ideals)}

    def _check_two_flips(self):
        m = len(self.ideals)
        bad = []
        for k in range(m):
            fl = self.flips_of(k)
            fakes = sum(1 for f in fl if f.kind == FAKE)
            at_boundary = self.fan.support != PLANE and k in (0, m - 1)
            if len(fl) != 2 or (fakes and not at_boundary) or (m == 1 and fakes != 2):
                bad.append(k)
        return not bad, {"failing_cones": bad}

    def _check_tangent(self):
        def check(k):
            return tangent_dimension(self.ideals[k], self.lattice, self.graver, self.options.search_cap)

        dims = self._per_ideal(check)
        ok = all(d == len(self.flips_of(k)) == 2 for k, d in enumerate(dims))
        return ok, {"dimensions": dims}

    def _check_wall_coherence(self):
        branches = []
        for k, I in enumerate(self.ideals):
            for f in self.flips_of(k):
                if f.kind != TRUE or self.ideals.index(f.target) < k:
                    continue
                _, w, branch = wall_coherence_witness(I, f.target, self.lattice, self.graver, self.fan)
                branches.append({"cone": k, "w": list(w), "branch": branch})
        return True, branches

    def _check_wall_normals(self):
        bad = []
        for k, I in enumerate(self.ideals):
            sigma, _, _ = special_simplex(I, self.lattice)
            keep = [i for i in range(self.lattice.n) if i not in sigma]
            I_sigma = localize(I, sigma)
            for f in self.flips_of(k):
                if f.kind != TRUE:
                    continue
                u = tuple(f.u[i] for i in keep)
                v = tuple(f.v[i] for i in keep)
                if u not in I_sigma.gens or v in I_sigma:
                    bad.append({"cone": k, "flip": str(f.binomial)})
        return not bad, {"failing": bad}

    def _check_flip_graph(self):
        graph = flip_graph(self.lattice, self.graver, self.fan)
        fan_adjacency = frozenset(
            frozenset((k, t)) for k in range(len(self.fan.cones)) for t in self.fan.neighbours(k)
        )
        shape_ok = (graph.shape == "cycle") == (self.fan.support == PLANE)
        ok = graph.adjacency() == fan_adjacency and graph.is_connected() and shape_ok
        return ok, {"shape": graph.shape, "vertices": len(graph.vertices), "edges": len(graph.edges)}
