#include <doctest.h>

#include <random>

#include "qsym/bicharacter.hpp"

using namespace qsym;

namespace {

Biform sym_matrix(std::vector<std::vector<std::int64_t>> m) {
    return Biform(std::move(m), BiformKind::symmetric);
}

Biform skew_matrix(std::vector<std::vector<std::int64_t>> m) {
    return Biform(std::move(m), BiformKind::skew);
}

}  // namespace

TEST_CASE("biform shape validation") {
    CHECK_THROWS_AS(sym_matrix({{1, 2}}), InvalidParameterError);          // not square
    CHECK_THROWS_AS(sym_matrix({{1, 2}, {3, 4}}), InvalidParameterError);  // not symmetric
    CHECK_THROWS_AS(skew_matrix({{1, 0}, {0, 1}}), InvalidParameterError);  // diagonal
    CHECK_THROWS_AS(skew_matrix({{0, 1}, {1, 0}}), InvalidParameterError);  // not skew
    CHECK_NOTHROW(sym_matrix({{1, 2}, {2, 4}}));
    CHECK_NOTHROW(skew_matrix({{0, 1}, {-1, 0}}));
    CHECK(Biform::zero(3, BiformKind::symmetric).rank() == 3);
}

TEST_CASE("biform application is the matrix pairing") {
    const Biform s = sym_matrix({{2, 1}, {1, 0}});
    const std::vector<std::int64_t> a{1, 2};
    const std::vector<std::int64_t> b{3, -1};
    // a^T S b = 2*1*3 + 1*1*(-1) + 1*2*3 + 0 = 11
    CHECK(static_cast<std::int64_t>(s.apply(a, b)) == 11);
}

TEST_CASE("pairing evaluation on generator pairs") {
    // diagonal symmetric form forces a sign on equal generators
    const GroupSpec z2sq = GroupSpec::cyclic_power(2, 2);
    const Bicharacter diag(z2sq, sym_matrix({{1, 0}, {0, 1}}),
                           Biform::zero(2, BiformKind::skew), Phase(1, 3));
    const auto s1 = GradeVector::generator(z2sq, 0);
    const auto s2 = GradeVector::generator(z2sq, 1);
    CHECK(diag.eval(s1, s1) == Phase::minus_one());
    CHECK(diag.eval(s1, s2) == Phase::one());
    CHECK(diag.eval(GradeVector::zero(z2sq), s2) == Phase::one());
    CHECK(diag.eval(s1, GradeVector::zero(z2sq)) == Phase::one());
    CHECK(diag.generator_value(1, 1) == Phase::minus_one());

    // pure skew pairing with q = i
    const GroupSpec z4sq = GroupSpec::cyclic_power(4, 2);
    const Bicharacter skewq(z4sq, Biform::zero(2, BiformKind::symmetric),
                            skew_matrix({{0, 1}, {-1, 0}}), Phase(1, 4));
    const auto t1 = GradeVector::generator(z4sq, 0);
    const auto t2 = GradeVector::generator(z4sq, 1);
    CHECK(skewq.eval(t1, t2) == Phase(1, 4));
    CHECK(skewq.eval(t2, t1) == Phase(3, 4));
    CHECK(skewq.eval(t1, t2) * skewq.eval(t2, t1) == Phase::one());

    const GroupSpec other = GroupSpec::cyclic_power(2, 3);
    CHECK_THROWS_AS(diag.eval(GradeVector::zero(other), s1), SpecMismatchError);
}

TEST_CASE("construction rejects ill-defined quotient pairings") {
    // sign part: odd modulus times odd symmetric entry
    const GroupSpec z3 = GroupSpec::cyclic_power(3, 1);
    CHECK_THROWS_AS(Bicharacter(z3, sym_matrix({{1}}), Biform::zero(1, BiformKind::skew),
                                Phase::minus_one()),
                    InvalidParameterError);
    CHECK_NOTHROW(Bicharacter(z3, sym_matrix({{2}}), Biform::zero(1, BiformKind::skew),
                              Phase::minus_one()));
    // q part: modulus times skew entry not divisible by the order of q
    const GroupSpec z2sq = GroupSpec::cyclic_power(2, 2);
    CHECK_THROWS_AS(Bicharacter(z2sq, Biform::zero(2, BiformKind::symmetric),
                                skew_matrix({{0, 1}, {-1, 0}}), Phase(1, 3)),
                    InvalidParameterError);
    CHECK_NOTHROW(Bicharacter(z2sq, Biform::zero(2, BiformKind::symmetric),
                              skew_matrix({{0, 1}, {-1, 0}}), Phase(1, 2)));
    // free factors carry no constraint
    CHECK_NOTHROW(Bicharacter(GroupSpec::free_group(1), sym_matrix({{1}}),
                              Biform::zero(1, BiformKind::skew), Phase(1, 3)));
    // shape mismatches
    CHECK_THROWS_AS(Bicharacter(z2sq, sym_matrix({{1}}), Biform::zero(2, BiformKind::skew),
                                Phase::minus_one()),
                    SpecMismatchError);
    CHECK_THROWS_AS(Bicharacter(z2sq, Biform::zero(2, BiformKind::skew),
                                Biform::zero(2, BiformKind::skew), Phase::minus_one()),
                    InvalidParameterError);
}

TEST_CASE("evaluation is invariant under quotient representatives") {
    const Bicharacter e = flux_bicharacter(3);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::int64_t> bit(0, 1);
    std::uniform_int_distribution<std::size_t> pos(0, 2);
    for (int t = 0; t < 200; ++t) {
        std::vector<std::int64_t> a{bit(rng), bit(rng), bit(rng)};
        std::vector<std::int64_t> b{bit(rng), bit(rng), bit(rng)};
        auto shifted = a;
        shifted[pos(rng)] += 2;  // same class in (Z_2)^3
        CHECK(e.eval_raw(a, b) == e.eval_raw(shifted, b));
        auto shifted_b = b;
        shifted_b[pos(rng)] += 4;
        CHECK(e.eval_raw(a, b) == e.eval_raw(a, shifted_b));
    }
}

TEST_CASE("charge-flux commutation table") {
    for (std::int64_t n = 1; n <= 6; ++n) {
        const Phase off = n % 2 == 0 ? Phase::one() : Phase::minus_one();
        const Phase diag = n % 2 == 0 ? Phase::minus_one() : Phase::one();
        for (std::int64_t i = 1; i <= n; ++i)
            for (std::int64_t j = 1; j <= n; ++j)
                CHECK(flux_pair_phase(n, i, j) == (i == j ? diag : off));
    }
    // -(-1)^N * (-1)^Omega with either sign choice Omega = +-1 off the
    // diagonal gives the same table
    for (std::int64_t n = 1; n <= 6; ++n) {
        const Phase base = Phase::minus_one() * Phase::minus_one().pow(n);
        const Phase omega_plus = base * Phase::minus_one().pow(1);
        const Phase omega_minus = base * Phase::minus_one().pow(-1);
        CHECK(omega_plus == omega_minus);
        if (n >= 2) CHECK(omega_plus == flux_pair_phase(n, 1, 2));
        CHECK(base == flux_pair_phase(n, 1, 1));
    }
    CHECK_THROWS_AS(flux_pair_phase(2, 0, 1), InvalidParameterError);
    CHECK_THROWS_AS(flux_pair_phase(2, 1, 3), InvalidParameterError);
}

TEST_CASE("flux pairing realizes its generator table") {
    CHECK(flux_bicharacter(2).generator_value(1, 2) == Phase::one());
    CHECK(flux_bicharacter(3).generator_value(1, 2) == Phase::minus_one());
    CHECK(flux_bicharacter(3).generator_value(1, 1) == Phase::one());
    for (std::int64_t n = 1; n <= 6; ++n) {
        const Bicharacter e = flux_bicharacter(n);
        CHECK(e.spec() == GroupSpec::cyclic_power(2, n));
        CHECK(e.q() == Phase::minus_one());
        for (std::int64_t i = 1; i <= n; ++i)
            for (std::int64_t j = 1; j <= n; ++j)
                CHECK(e.generator_value(i, j) == flux_pair_phase(n, i, j));
    }
    CHECK_THROWS_AS(flux_bicharacter(0), InvalidParameterError);
    CHECK_THROWS_AS(flux_bicharacter(1000), InvalidParameterError);
}

TEST_CASE("multiplicativity holds for constructed pairings") {
    for (std::int64_t n = 1; n <= 4; ++n) {
        const auto rep = verify_bicharacter(flux_bicharacter(n));
        CHECK(rep.pass);
        CHECK(rep.checked ==
              static_cast<std::uint64_t>(1) << (3 * static_cast<unsigned>(n)));
        CHECK(rep.witnesses.empty());
    }
    // trivial pairing
    const GroupSpec z2sq = GroupSpec::cyclic_power(2, 2);
    const Bicharacter triv(z2sq, Biform::zero(2, BiformKind::symmetric),
                           Biform::zero(2, BiformKind::skew), Phase::one());
    CHECK(verify_bicharacter(triv).pass);
}

TEST_CASE("corrupted tables fail multiplicativity with witnesses") {
    const Bicharacter e = flux_bicharacter(2);
    const GradeVector s1 = GradeVector::generator(e.spec(), 0);
    const GradeVector s1s2(e.spec(), {1, 1});
    const PhaseFn corrupted = [&](const GradeVector& a, const GradeVector& b) {
        if (a == s1 && b == s1s2) return Phase(1, 3);  // out-of-family value
        return e.eval(a, b);
    };
    const auto rep = verify_bicharacter(e.spec(), corrupted);
    CHECK_FALSE(rep.pass);
    CHECK(rep.witnesses.size() > 0);
    CHECK(rep.witnesses.size() <= VerifyReport::kMaxWitnesses);
    // the witness names the offending triple
    bool mentions = false;
    for (const auto& w : rep.witnesses)
        if (w.find("(1,0)") != std::string::npos) mentions = true;
    CHECK(mentions);
}

TEST_CASE("normalization check") {
    for (std::int64_t n = 1; n <= 4; ++n) {
        const auto rep = verify_normalized(flux_bicharacter(n));
        CHECK(rep.pass);
        CHECK(rep.checked == static_cast<std::uint64_t>(1) << (2 * static_cast<unsigned>(n)));
    }
    // symmetric biform alone always normalizes: (-1)^{(a|b)+(b|a)} = +1
    const GroupSpec z2sq = GroupSpec::cyclic_power(2, 2);
    const Bicharacter symonly(z2sq, sym_matrix({{0, 1}, {1, 0}}),
                              Biform::zero(2, BiformKind::skew), Phase::one());
    CHECK(verify_normalized(symonly).pass);
    // a constant non-real table is not normalized
    const PhaseFn constant_i = [](const GradeVector&, const GradeVector&) {
        return Phase(1, 4);
    };
    const auto rep = verify_normalized(z2sq, constant_i);
    CHECK_FALSE(rep.pass);
    CHECK(rep.witnesses.size() > 0);
}

TEST_CASE("sampled verification is reproducible and seed-dependent") {
    const GroupSpec freesq = GroupSpec::free_group(2);
    const Bicharacter e(freesq, sym_matrix({{1, 0}, {0, 1}}),
                        skew_matrix({{0, 1}, {-1, 0}}), Phase(1, 4));
    SamplePolicy policy;
    policy.seed = 9;
    const auto r1 = verify_bicharacter(e, policy);
    const auto r2 = verify_bicharacter(e, policy);
    CHECK(r1.pass);
    CHECK(r1.checked == policy.samples);
    CHECK(r1.checked == r2.checked);
    CHECK(r1.witnesses == r2.witnesses);
    policy.samples = 250;
    CHECK(verify_bicharacter(e, policy).checked == 250);
}

TEST_CASE("braiding swaps tensor factors with the transposed phase") {
    const Bicharacter e = flux_bicharacter(3);
    const GradedBasisVector u{0, GradeVector::generator(e.spec(), 0)};
    const GradedBasisVector v{1, GradeVector::generator(e.spec(), 1)};
    const BraidedPair p = braiding_apply(e, u, v);
    CHECK(p.coeff == Phase::minus_one());
    CHECK(p.first.index == 1);
    CHECK(p.second.index == 0);

    const GroupSpec z2 = GroupSpec::cyclic_power(2, 1);
    const Bicharacter triv(z2, Biform::zero(1, BiformKind::symmetric),
                           Biform::zero(1, BiformKind::skew), Phase::one());
    const GradedBasisVector a{3, GradeVector::generator(z2, 0)};
    const BraidedPair q = braiding_apply(triv, a, a);
    CHECK(q.coeff == Phase::one());

    // double braiding is the identity for normalized pairings
    const BraidedPair back = braiding_apply(e, p.first, p.second);
    CHECK(back.coeff * p.coeff == Phase::one());
    CHECK(back.first.index == 0);
}

TEST_CASE("braid relation on basis triples") {
    const auto rep3 = verify_ybe(flux_bicharacter(3), single_particle_basis(
                                                          GroupSpec::cyclic_power(2, 3)));
    CHECK(rep3.pass);
    CHECK(rep3.checked == 27);

    const GroupSpec z3sq = GroupSpec::cyclic_power(3, 2);
    const Bicharacter qskew(z3sq, Biform::zero(2, BiformKind::symmetric),
                            skew_matrix({{0, 1}, {-1, 0}}), Phase(1, 3));
    const auto repq = verify_ybe(qskew, single_particle_basis(z3sq));
    CHECK(repq.pass);
    CHECK(repq.checked == 8);

    // the relation is structural for diagonal braidings: even corrupted
    // tables satisfy it, because both composites multiply the same three
    // factors
    const PhaseFn corrupted = [](const GradeVector& a, const GradeVector& b) {
        return Phase((3 * a.component(0) + 5 * b.component(1)) % 7, 7);
    };
    CHECK(verify_ybe(z3sq, corrupted, single_particle_basis(z3sq)).pass);
}

TEST_CASE("double braiding detects non-normalized tables") {
    CHECK(verify_braid_involution(flux_bicharacter(4),
                                  single_particle_basis(GroupSpec::cyclic_power(2, 4)))
              .pass);
    const GroupSpec z2sq = GroupSpec::cyclic_power(2, 2);
    const PhaseFn constant_i = [](const GradeVector&, const GradeVector&) {
        return Phase(1, 4);
    };
    const auto rep = verify_braid_involution(z2sq, constant_i, single_particle_basis(z2sq));
    CHECK_FALSE(rep.pass);
    CHECK(rep.checked == 4);
    CHECK(rep.witnesses.size() > 0);
}

TEST_CASE("single particle basis carries the generator grades") {
    const GroupSpec spec = GroupSpec::cyclic_power(2, 3);
    const auto basis = single_particle_basis(spec);
    REQUIRE(basis.size() == 3);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        CHECK(basis[i] == GradeVector::generator(spec, i));
    }
}
