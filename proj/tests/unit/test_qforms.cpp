#include <gtest/gtest.h>

#include "l2bs/error.hpp"
#include "l2bs/qforms.hpp"

using namespace l2bs;

TEST(QForms, ParseAndSignature) {
    auto f = DiagonalForm::parse("1,1,1,-1,-3,-3");
    EXPECT_EQ(signature(f).positive, 3);
    EXPECT_EQ(signature(f).negative, 3);
    EXPECT_EQ(f.str(), "<1,1,1,-1,-3,-3>");
    EXPECT_EQ(DiagonalForm::parse("1/2,-1/3").integer_coeffs(), (std::vector<std::int64_t>{3, -2}));
    EXPECT_THROW(DiagonalForm::parse("1,0"), InvalidInput);
    EXPECT_THROW(DiagonalForm::parse("1,a"), InvalidInput);
}

TEST(QForms, SearchFindsLeastWitness) {
    auto r = isotropy_search(DiagonalForm::parse("1,1,-2"), 5);
    EXPECT_EQ(r.verdict, IsotropyVerdict::Isotropic);
    EXPECT_EQ(r.witness, (std::vector<std::int64_t>{1, 1, 1}));
    EXPECT_EQ(r.height, 1);
    auto s = isotropy_search(DiagonalForm::parse("1,1,-5"), 5);
    EXPECT_EQ(s.witness, (std::vector<std::int64_t>{1, 2, 1}));
    auto t = isotropy_search(DiagonalForm::parse("1,1,-3,-3"), 12);
    EXPECT_EQ(t.verdict, IsotropyVerdict::NoZeroUpTo);
    auto u = isotropy_search(DiagonalForm::parse("1,-1"), 3);
    EXPECT_EQ(u.witness, (std::vector<std::int64_t>{1, 1}));
}

TEST(QForms, Certificate) {
    auto c = certify_anisotropic_family(7, 10);
    EXPECT_EQ(c.verdict, IsotropyVerdict::CertifiedAnisotropic);
    EXPECT_GE(c.steps.size(), 4u);
    EXPECT_THROW(certify_anisotropic_family(9), InvalidInput);
    try {
        certify_anisotropic_family(5, 10);
        FAIL();
    } catch (const InvalidInput& e) {
        EXPECT_NE(std::string(e.what()).find("witness"), std::string::npos);
    }
}

TEST(QForms, Candidates) {
    auto c = so33_rank_one_candidates();
    ASSERT_EQ(c.size(), 2u);
    EXPECT_EQ(anisotropic_kernel(c[0]).size(), 2u);
    EXPECT_EQ(anisotropic_kernel(c[1]).size(), 1u);
}

TEST(QForms, Pipeline) {
    auto r = example46_pipeline(3, 10);
    EXPECT_EQ(r.restricted_type, "A1");
    EXPECT_EQ(r.restricted.multiplicity_of({1}), 4);
    EXPECT_EQ(r.minimal.growth_degree, 4);
    EXPECT_EQ(r.bound.bound, NSValue(Rational(4)));
    EXPECT_EQ(r.torsion.kind, VerdictKind::OddOpen);
    EXPECT_FALSE(r.torsion.note.empty());
    EXPECT_THROW(example46_pipeline(13), InvalidInput);
}
