"""Property evaluation, stability, closure criteria, and cyclicity checks."""

import pytest

from weylkit.catalog import all_entries, make
from weylkit.checker import (check_uwe_factorization, check_hypercyclic_criterion,
                             check_supercyclic_criterion, closure_hp_connectedness,
                             closure_sp_connectedness, evaluate_properties,
                             uwe_stable_under_compacts)
from weylkit.errors import FlagMissing, InternalConsistencyError
from weylkit.regions import (ALPHA_INF, Circle, Disk, EmptyRegion,
                             FinitePoints, SpectralPicture, UnionRegion,
                             regions_equal)


def uniform_picture(label, region, eigen=None, flags=None):
    return SpectralPicture(label, region, region, region, region, region, region,
                           eigen_multiplicity=eigen or {}, flags=flags or {})


def disk_picture():
    disk = Disk(0j, 1.0, closed=True)
    circle = Circle(0j, 1.0)
    return SpectralPicture("disk", disk, disk, circle, disk, disk, disk)


def rolewicz_picture():
    """Scaled backward shift: hypercyclic, spectrum a disk of radius 2."""
    disk = Disk(0j, 2.0, closed=True)
    circle = Circle(0j, 2.0)
    return SpectralPicture("rolewicz", disk, disk, circle, disk, disk, disk,
                           flags={"is_hypercyclic": True})


def circle_plus_points(points, alphas=None, flags=None):
    circle = Circle(0j, 1.0)
    sigma = UnionRegion((circle, FinitePoints(tuple(points))))
    eigen = {p: (alphas or {}).get(p, 1) for p in points}
    return SpectralPicture("circle+points", sigma, sigma, circle, circle, circle,
                           circle, eigen_multiplicity=eigen, flags=flags or {})


class TestEvaluateProperties:
    def test_example_a_satisfies_uwe(self):
        report = evaluate_properties(make("exampleA").picture)
        assert report.uwe is True
        assert report.ve is True

    def test_example_v_fails_ve_with_witness_zero(self):
        report = evaluate_properties(make("exampleV").picture)
        assert report.ve is False
        assert report.witnesses["ve"] == 0j

    def test_zero_interleave_fails_uwe(self):
        report = evaluate_properties(make("zeroInterleave").picture)
        assert report.uwe is False
        assert report.weyl is True          # empty gap, empty E0

    def test_implication_chain_on_catalog(self):
        for entry in all_entries():
            report = evaluate_properties(entry.picture)
            assert (not report.uwe) or report.property_w
            assert (not report.property_w) or report.weyl
            assert (not report.weyl) or report.browder

    def test_ve_factorization_on_catalog(self):
        for entry in all_entries():
            report = evaluate_properties(entry.picture)
            sigma_match, _ = regions_equal(entry.picture.sigma, entry.picture.sigma_a)
            assert report.ve == (report.uwe and sigma_match)

    def test_inconsistent_picture_raises(self):
        # Infinite multiplicity outside sigma_uw: (UW_E) evaluates true
        # but property (w) cannot, which no genuine operator produces.
        pic = circle_plus_points([5.0 + 0j], alphas={5.0 + 0j: ALPHA_INF})
        with pytest.raises(InternalConsistencyError):
            evaluate_properties(pic)

    def test_invalid_picture_rejected(self):
        pic = uniform_picture("broken", FinitePoints((0j,)), eigen={0j: 1})
        pic.sigma_b = EmptyRegion()
        with pytest.raises(ValueError):
            evaluate_properties(pic)

    def test_deterministic(self):
        pic = make("exampleA").picture
        assert evaluate_properties(pic) == evaluate_properties(pic)


class TestCheckR1:
    def test_true_on_all_catalog_entries(self):
        for entry in all_entries():
            assert check_uwe_factorization(entry.picture) is True, entry.name


class TestUweStability:
    def test_ex29_unstable(self):
        assert uwe_stable_under_compacts(make("ex29", {"J": 2}).picture) is False

    def test_circle_spectrum_unstable(self):
        circle = Circle(0j, 1.0)
        assert uwe_stable_under_compacts(uniform_picture("circle", circle)) is False

    def test_disk_spectrum_stable(self):
        assert uwe_stable_under_compacts(disk_picture()) is True

    def test_resolution_stable(self):
        circle_pic = uniform_picture("circle", Circle(0j, 1.0))
        for res in (256, 512, 1024):
            assert uwe_stable_under_compacts(make("ex29", {"J": 2}).picture, res) is False
            assert uwe_stable_under_compacts(disk_picture(), res) is True
            assert uwe_stable_under_compacts(circle_pic, res) is False


class TestClosureCriteria:
    def test_hp_example_a_false(self):
        assert closure_hp_connectedness(make("exampleA").picture) is False

    def test_hp_example_v_true(self):
        assert closure_hp_connectedness(make("exampleV").picture) is True

    def test_hp_far_point_false(self):
        pic = uniform_picture("far", FinitePoints((5.0 + 0j,)), eigen={5.0 + 0j: 1})
        assert closure_hp_connectedness(pic) is False

    def test_sp_disk_smallest_radius(self):
        assert closure_sp_connectedness(disk_picture()) == (True, 0.0)

    def test_sp_example_a_no_radius(self):
        # Frozen oracle outcome: the sequence points sit at distinct
        # moduli on the real axis, so no single circle joins them.
        assert closure_sp_connectedness(make("exampleA").picture) == (False, None)

    def test_sp_two_moduli_false(self):
        pic = uniform_picture("two", FinitePoints((1.0 + 0j, 5.0 + 0j)),
                              eigen={1.0 + 0j: 1, 5.0 + 0j: 1})
        assert closure_sp_connectedness(pic) == (False, None)

    def test_sp_interleave_tension_documented(self):
        # The connectedness test succeeds on the interleave spectrum even
        # though the recorded verdict keeps it outside the supercyclic
        # closure; the catalog notes carry the discrepancy.
        entry = make("interleave")
        connected, radius = closure_sp_connectedness(entry.picture)
        assert connected is True and radius == 0.0
        assert entry.verdicts["in_SP_closure"] is False
        assert "necessary" in entry.notes


class TestTh5Hypercyclic:
    def test_consistent_rolewicz(self):
        verdict = check_hypercyclic_criterion(rolewicz_picture())
        assert verdict.consistent is True
        assert "consistent" in verdict.detail

    def test_bad_fixture_flagged(self):
        pic = circle_plus_points([2.0 + 0j], flags={"is_hypercyclic": True})
        verdict = check_hypercyclic_criterion(pic)
        assert verdict.consistent is False

    def test_flag_required(self):
        with pytest.raises(FlagMissing):
            check_hypercyclic_criterion(disk_picture())

    def test_example_v_hypothetical_flag_inconsistent(self):
        # sigma_a of this operator is the closed disk, so (UW_E) fails;
        # flagging it hypercyclic (it is not) trips the consistency check.
        pic = make("exampleV").picture
        pic.flags["is_hypercyclic"] = True
        assert check_hypercyclic_criterion(pic).consistent is False


class TestTh5Supercyclic:
    def test_empty_e_consistent(self):
        pic = disk_picture()
        pic.flags["is_supercyclic"] = True
        verdict = check_supercyclic_criterion(pic)
        assert verdict.consistent is True
        assert verdict.alpha is None

    def test_singleton_off_browder(self):
        pic = circle_plus_points([2.0 + 0j], flags={"is_supercyclic": True})
        verdict = check_supercyclic_criterion(pic)
        assert verdict.consistent is True
        assert verdict.alpha == 2.0 + 0j

    def test_two_points_inconsistent(self):
        pic = circle_plus_points([2.0 + 0j, 3.0 + 0j], flags={"is_supercyclic": True})
        assert check_supercyclic_criterion(pic).consistent is False

    def test_flag_and_hypothesis_required(self):
        with pytest.raises(FlagMissing):
            check_supercyclic_criterion(disk_picture())
        pic = disk_picture()
        pic.flags["is_supercyclic"] = True
        with pytest.raises(FlagMissing):
            check_supercyclic_criterion(pic, adjoint_condition=False)
