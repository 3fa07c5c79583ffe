from fractions import Fraction

import pytest

from catalyxis import _kernels
from catalyxis.bounds import CandidateVerdict, check_candidate, dimension_lower_bound, qubit_window
from catalyxis.errors import ResourceLimit
from catalyxis.majorization import make_probvec, qubit
from catalyxis.metrics import is_catalyst
from catalyxis.search import (
    LIMIT_ENV,
    empirical_min_dimension,
    grid_search,
    qubit_grid_mask,
    scan_qubit_regions,
)
from conftest import PAIR_D3, PAIR_HIGHER, PAIR_SIMPLE, PAIR_TWO_REGIONS, vec

Fr = Fraction


class TestScan:
    def test_two_regions(self, backend):
        rep = scan_qubit_regions(*PAIR_TWO_REGIONS, resolution=1000)
        assert len(rep.regions) == 2
        first, second = rep.regions
        assert Fr(1, 5) in first and Fr(7, 20) in second
        assert first.hi < Fr(3, 10) < second.lo

    def test_single_region_inside_window(self, backend):
        rep = scan_qubit_regions(*PAIR_SIMPLE, resolution=1000)
        w = qubit_window(*PAIR_SIMPLE)
        assert len(rep.regions) == 1
        g = rep.regions[0]
        assert w.t_lo < g.lo <= g.hi < w.t_hi

    def test_d3_empty(self):
        assert scan_qubit_regions(*PAIR_D3, resolution=200).regions == ()

    def test_brackets_keep_one_catalytic_end(self):
        p, q = PAIR_TWO_REGIONS
        rep = scan_qubit_regions(p, q, resolution=100, refine_precision=Fr(1, 10**6))
        for g in rep.regions:
            assert g.lo_refined and g.hi_refined
            assert is_catalyst(p, q, qubit(g.lo)) and is_catalyst(p, q, qubit(g.hi))
            assert not is_catalyst(p, q, qubit(g.lo_outer))
            assert not is_catalyst(p, q, qubit(g.hi_outer))
            assert g.lo - g.lo_outer < Fr(1, 10**6)
            assert g.hi_outer - g.hi < Fr(1, 10**6)

    def test_doubling_resolution_keeps_grid_points(self):
        p, q = PAIR_TWO_REGIONS
        coarse = qubit_grid_mask(p, q, 200)
        fine = qubit_grid_mask(p, q, 400)
        assert fine[::2].tolist() == coarse.tolist()

    def test_comparable_pair_covers_everything(self):
        rep = scan_qubit_regions(make_probvec(["0.25"] * 4), PAIR_SIMPLE[1], resolution=20)
        (g,) = rep.regions
        assert (g.lo, g.hi, g.lo_refined, g.hi_refined) == (0, Fr(1, 2), False, False)

    def test_region_edges_inside_window(self):
        p, q = PAIR_TWO_REGIONS
        w = qubit_window(p, q)
        for g in scan_qubit_regions(p, q, resolution=500).regions:
            assert w.contains(g.lo) and w.contains(g.hi)

    def test_rejects_small_resolution(self):
        with pytest.raises(ValueError):
            scan_qubit_regions(*PAIR_SIMPLE, resolution=5)

    def test_exact_fallback_for_huge_denominators(self):
        # denominators past int64 force the Fraction path; result must agree
        big = 10**19 + 7
        p = make_probvec([Fr(45 * big + 1, 100 * big), Fr(35, 100), Fr(12, 100), Fr(8 * big - 1, 100 * big)])
        q = PAIR_SIMPLE[1]
        P, Q, den = _kernels.scale_pair(p, q)
        mask = qubit_grid_mask(p, q, 40)
        assert not _kernels.fits_int64(den, 80)
        ref = [is_catalyst(p, q, qubit(Fr(j, 80))) for j in range(41)]
        assert mask.tolist() == ref
        # the perturbation only moves the edge at t = 3/10
        near = qubit_grid_mask(*PAIR_SIMPLE, 40).tolist()
        assert [j for j in range(41) if near[j] != ref[j]] == [24]


class TestGridSearch:
    def test_higher_example_has_no_qubit_catalyst(self, backend):
        res = grid_search(*PAIR_HIGHER, k=2, resolution=100)
        assert res.catalysts_found == () and res.exhausted
        assert res.candidates_checked == 51

    def test_two_region_contains_point(self, backend):
        res = grid_search(*PAIR_TWO_REGIONS, k=2, resolution=20)
        assert vec("0.8,0.2") in res.catalysts_found

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_d3_always_empty(self, k):
        assert grid_search(*PAIR_D3, k=k, resolution=30).catalysts_found == ()

    def test_k1_empty_for_incomparable(self):
        assert grid_search(*PAIR_SIMPLE, k=1, resolution=5).catalysts_found == ()

    def test_catalysts_are_verified_and_sound(self):
        p, q = PAIR_TWO_REGIONS
        res = grid_search(p, q, k=3, resolution=40)
        assert res.catalysts_found
        k_min = dimension_lower_bound(p, q).k_min
        for r in res.catalysts_found:
            assert is_catalyst(p, q, r)
            assert check_candidate(p, q, r) is CandidateVerdict.NotExcluded
            assert len(r.stripped()) >= k_min

    def test_resource_limit(self):
        with pytest.raises(ResourceLimit) as info:
            grid_search(*PAIR_SIMPLE, k=4, resolution=60, limit=100)
        assert info.value.ceiling == 100 and info.value.count > 100

    def test_limit_from_environment(self, monkeypatch):
        monkeypatch.setenv(LIMIT_ENV, "10")
        with pytest.raises(ResourceLimit):
            grid_search(*PAIR_SIMPLE, k=2, resolution=30)

    def test_stop_at_first(self):
        res = grid_search(*PAIR_TWO_REGIONS, k=2, resolution=20, stop_at_first=True)
        full = grid_search(*PAIR_TWO_REGIONS, k=2, resolution=20)
        assert res.catalysts_found == full.catalysts_found[:1]
        assert not res.exhausted

    def test_deterministic(self):
        a = grid_search(*PAIR_TWO_REGIONS, k=3, resolution=30)
        b = grid_search(*PAIR_TWO_REGIONS, k=3, resolution=30)
        assert a == b


class TestEmpiricalMinDimension:
    def test_two_region_pair(self):
        assert empirical_min_dimension(*PAIR_TWO_REGIONS, k_max=3, resolution=20) == 2

    def test_d3_absent(self):
        assert empirical_min_dimension(*PAIR_D3, k_max=3, resolution=30) is None

    def test_higher_example_respects_bound(self):
        # no catalyst on the k <= 3 grid at N = 60; one appears at k = 4
        k_min = dimension_lower_bound(*PAIR_HIGHER).k_min
        assert empirical_min_dimension(*PAIR_HIGHER, k_max=3, resolution=60) is None
        found = empirical_min_dimension(*PAIR_HIGHER, k_max=4, resolution=60)
        assert found == 4 and found >= k_min
