"""Extremal tree constructions and their certificates."""

import dataclasses

import pytest
from hypothesis import given, settings

from conftest import degree_sequences
from treenullity import (
    ConstructionInvariantViolated,
    DegreeSequence,
    bounds,
    build_max,
    build_min,
    internal_leaf_adjacency_violations,
    parse_sequence,
    stats,
    verify_certificate,
)
from treenullity.extremal import BRANCH_FEW_LEAVES, BRANCH_MANY_LEAVES
from treenullity.treegraph import from_valid_edges

FIG_1A = parse_sequence("1,1,1,1,1,1,2,2,3,3,4")
FIG_1B = parse_sequence("1,1,1,1,2,2,2,2,2,3,3")
STAR_9 = parse_sequence("1,1,1,1,1,1,1,1,8")
FIG_2B = DegreeSequence((1,) * 10 + (2, 4, 4, 4, 4))
FIG_2C = DegreeSequence((1,) * 11 + (3, 3, 3, 3, 3, 4, 4))


class TestBuildMin:
    def test_figure_1a_exact_edges(self):
        cert = build_min(FIG_1A)
        want = {(1, 11), (10, 11), (9, 11), (8, 11), (2, 10),
                (7, 10), (3, 9), (6, 9), (4, 8), (5, 7)}
        assert set(cert.tree.edges) == want
        assert cert.branch == BRANCH_MANY_LEAVES
        assert cert.matching.size == 5
        assert cert.tree.nullity() == 1

    def test_figure_1b_values(self):
        cert = build_min(FIG_1B)
        assert cert.branch == BRANCH_FEW_LEAVES
        assert cert.tree.degree_multiset() == FIG_1B
        assert cert.matching.size == 5
        assert cert.tree.nullity() == 1
        # Path block v_{l+1}..v_{n-l} joined to the leafy part at v_1.
        assert cert.path_block == (5, 6, 7)
        assert (1, 5) in cert.tree.edges

    def test_path_3(self):
        cert = build_min(parse_sequence("1,1,2"))
        assert cert.tree.degree_multiset().degrees == (1, 1, 2)
        assert cert.matching.size == 1
        assert cert.tree.nullity() == 1

    def test_single_edge(self):
        cert = build_min(parse_sequence("1,1"))
        assert cert.tree.edges == ((1, 2),)
        assert cert.matching.edges == ((1, 2),)

    def test_singleton_path_block(self):
        cert = build_min(parse_sequence("1,1,2,2,2"))
        assert cert.branch == BRANCH_FEW_LEAVES
        assert cert.path_block == (3,)
        assert cert.matching.size == 2

    def test_deterministic_bytes(self):
        import json

        a = json.dumps(build_min(FIG_1B).to_json_dict())
        b = json.dumps(build_min(FIG_1B).to_json_dict())
        assert a == b


class TestBuildMax:
    def test_star(self):
        cert = build_max(STAR_9)
        assert cert.tree.degree_multiset() == STAR_9
        assert cert.omega == 0
        assert cert.v_k == ()
        assert cert.v_mk is None
        assert cert.p_k == ()
        assert cert.tree.nullity() == 7
        assert cert.m_s.size == 1

    def test_figure_2b(self):
        cert = build_max(FIG_2B)
        assert cert.tree.degree_multiset() == FIG_2B
        assert cert.omega == 2
        assert len(cert.v_k) == 2
        assert cert.l_mk == 2
        assert cert.m_s.size == 4
        assert cert.tree.nullity() == 7
        assert cert.tree.distance(cert.v_k[0], cert.v_k[1]) == 2

    def test_figure_2c(self):
        cert = build_max(FIG_2C)
        assert cert.omega == 2
        assert cert.l_mk == 0
        assert cert.m_s.size == 5
        assert cert.tree.nullity() == 8

    def test_single_edge(self):
        cert = build_max(parse_sequence("1,1"))
        assert cert.omega == 0
        assert cert.m_s.edges == ((1, 2),)

    def test_path_realization(self):
        # All internal degrees 2: the unique realization is a path.
        cert = build_max(parse_sequence("1,1,2,2,2"))
        assert sorted(cert.tree.degree_multiset().degrees) == [1, 1, 2, 2, 2]
        assert cert.omega == 1
        assert cert.m_s.size == 2

    def test_on_path_exceptions_are_only_between_connectors(self):
        # Degree-2 vertices wedged between two connectors have no leaf
        # neighbor; everything off the connector path must have one.
        cert = build_max(parse_sequence("1,1,2,2,2,2,2"))
        strict = internal_leaf_adjacency_violations(cert.tree, cert.v_k)
        assert strict  # the documented exception exists on paths with n >= 7
        assert set(strict) <= set(cert.p_k)

    def test_deterministic_bytes(self):
        import json

        a = json.dumps(build_max(FIG_2C).to_json_dict())
        b = json.dumps(build_max(FIG_2C).to_json_dict())
        assert a == b


class TestVerify:
    @pytest.mark.parametrize("s", [FIG_1A, FIG_1B, STAR_9, FIG_2B, FIG_2C])
    def test_produced_certificates_pass(self, s):
        for cert in (build_min(s), build_max(s)):
            report = verify_certificate(cert, s)
            assert report.ok, report.failures()

    def test_detects_deleted_edge(self):
        cert = build_min(FIG_1A)
        broken = from_valid_edges(cert.tree.n, cert.tree.edges[1:])
        report = verify_certificate(dataclasses.replace(cert, tree=broken), FIG_1A)
        assert not report.ok
        assert report.checks[0].name == "tree-structure"
        assert report.checks[0].detail in ("WrongEdgeCount", "NotConnected")

    def test_detects_degree_mismatch(self):
        cert = build_min(FIG_1A)
        report = verify_certificate(cert, FIG_1B)
        assert not report.ok
        assert any(c.name == "degree-multiset" and not c.passed for c in report.checks)

    def test_detects_wrong_omega(self):
        cert = build_max(FIG_2B)
        report = verify_certificate(dataclasses.replace(cert, omega=3), FIG_2B)
        assert any(c.name == "omega-counts-v_k" and not c.passed for c in report.checks)

    def test_detects_bad_matching(self):
        cert = build_max(FIG_2B)
        bad = dataclasses.replace(cert, m_s=cert.m_k)
        report = verify_certificate(bad, FIG_2B)
        assert not report.ok

    def test_rank_check_skipped_above_limit(self):
        report = verify_certificate(build_min(FIG_1A), FIG_1A, rank_limit=5)
        entry = next(c for c in report.checks if c.name == "rank-cross-check")
        assert entry.passed and "skipped" in entry.detail

    def test_report_serializes(self):
        report = verify_certificate(build_max(STAR_9), STAR_9)
        d = report.to_json_dict()
        assert d["ok"] is True
        assert all(set(c) == {"name", "passed", "detail"} for c in d["checks"])


class TestConstructionProperties:
    @given(degree_sequences(max_n=40))
    @settings(max_examples=150, deadline=None)
    def test_both_builders_hit_the_formulas(self, s):
        b = bounds(s)
        cmin = build_min(s)
        cmax = build_max(s)
        assert cmin.tree.degree_multiset() == s == cmax.tree.degree_multiset()
        assert cmin.matching.size == b.nu_max
        assert cmax.m_s.size == b.nu_min
        assert cmin.tree.nullity() == b.nullity_min
        assert cmax.tree.nullity() == b.nullity_max

    @given(degree_sequences(max_n=30))
    @settings(max_examples=80, deadline=None)
    def test_certificates_verify(self, s):
        assert verify_certificate(build_min(s), s).ok
        assert verify_certificate(build_max(s), s).ok

    @given(degree_sequences(min_n=3, max_n=30))
    @settings(max_examples=80, deadline=None)
    def test_max_lemma_invariants(self, s):
        cert = build_max(s)
        st = stats(s)
        tree = cert.tree
        assert st.a - st.l <= cert.omega <= st.a - st.l + 1
        assert (cert.omega == st.a - st.l) == (cert.l_mk == 0)
        assert s.n - 1 - st.l == -cert.l_mk + sum(tree.degree(v) for v in cert.v_k)
        color = tree.two_coloring()
        assert len({color[v] for v in cert.v_k}) <= 1
