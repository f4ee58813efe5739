#include "doctest.h"

#include "actionwin/barcode.hpp"
#include "actionwin/fixtures.hpp"
#include "actionwin/random.hpp"
#include "oracle.hpp"

using namespace actionwin;

namespace {

Bar bar(Rational s, Action e, int d) { return Bar{Action(s), e, d}; }

const std::vector<FieldSpec>& fields() {
    static const std::vector<FieldSpec> f{FieldSpec::f2(), FieldSpec::fp(5), FieldSpec::rationals()};
    return f;
}

}  // namespace

TEST_CASE("canonical form examples") {
    auto zero = fixtures::equal_action_pair();
    auto f0 = canonical_form(zero);
    CHECK(f0.pairs.empty());
    CHECK(f0.unpaired.size() == 2);
    CHECK(f0.base_change == Matrix::identity(zero.field(), 2));

    auto f1 = canonical_form(fixtures::acyclic_pair());
    REQUIRE(f1.pairs.size() == 1);
    CHECK(f1.pairs[0] == std::pair<std::string, std::string>{"c1", "c0"});
    CHECK(f1.unpaired.empty());

    auto f4 = canonical_form(fixtures::four_generator());
    std::set<std::pair<std::string, std::string>> pairs(f4.pairs.begin(), f4.pairs.end());
    CHECK(pairs == std::set<std::pair<std::string, std::string>>{{"x1", "y2"}, {"x2", "y1"}});
}

TEST_CASE("canonical form invariants on random complexes") {
    Rng rng(21);
    for (int i = 0; i < 90; ++i) {
        auto c = random_complex(fields()[i % 3], rng);
        auto form = canonical_form(c);
        CHECK(form.base_change.is_upper_triangular());
        auto transformed = c.change_basis(form.base_change);
        std::set<std::string> seen;
        for (const auto& [x, y] : form.pairs) {
            CHECK(c.generator(y).action < c.generator(x).action);
            CHECK(seen.insert(x).second);
            CHECK(seen.insert(y).second);
            CHECK(transformed.boundary(x) == ChainVector{{y, Scalar::one(c.field())}});
            CHECK(transformed.boundary(y).is_zero());
        }
        for (const auto& u : form.unpaired) {
            CHECK(seen.insert(u).second);
            CHECK(transformed.boundary(u).is_zero());
        }
        CHECK(seen.size() == c.size());
        for (std::size_t r = 0; r < c.size(); ++r)
            for (std::size_t k = 0; k < c.size(); ++k)
                if (!form.base_change.at(r, k).is_zero())
                    CHECK(c.generators()[r].action <= c.generators()[k].action);
    }
}

TEST_CASE("closed-form barcodes") {
    Barcode one{bar(2, Action::pos_inf(), 1)};
    Barcode pair{bar(1, Action(2), 0)};
    CHECK(barcode(fixtures::one_generator()) == one);
    CHECK(barcode_definitional(fixtures::one_generator()) == one);
    CHECK(barcode(fixtures::acyclic_pair()) == pair);
    CHECK(barcode_definitional(fixtures::acyclic_pair()) == pair);
    auto sum = fixtures::one_generator().direct_sum(fixtures::acyclic_pair());
    CHECK(barcode(sum) == sorted({one[0], pair[0]}));
    CHECK(barcode_definitional(sum) == sorted({one[0], pair[0]}));
    Barcode twin{bar(1, Action::pos_inf(), 0), bar(1, Action::pos_inf(), 0)};
    CHECK(barcode(fixtures::equal_action_pair()) == twin);
    CHECK(barcode_definitional(fixtures::equal_action_pair()) == twin);
    CHECK(barcode(fixtures::four_generator()) ==
          sorted({bar(1, Action(4), 0), bar(2, Action(3), 0)}));
}

TEST_CASE("both engines agree with the rank-function oracle") {
    Rng rng(22);
    for (int i = 0; i < 150; ++i) {
        auto c = random_complex(fields()[i % 3], rng);
        auto expected = oracle::barcode(c);
        CHECK(barcode(c) == expected);
        CHECK(barcode_definitional(c) == expected);
    }
}

TEST_CASE("direct-sum additivity and base-change invariance") {
    Rng rng(23);
    RandomComplexOptions opt;
    opt.max_generators = 10;
    for (int i = 0; i < 60; ++i) {
        const auto& field = fields()[i % 3];
        auto a = random_complex(field, rng, opt);
        auto b0 = random_complex(field, rng, opt);
        std::vector<Generator> gens;
        std::map<std::string, ChainVector> d;
        for (const auto& g : b0.generators()) gens.push_back({"t" + g.id, g.action, g.degree});
        for (const auto& g : b0.generators()) {
            ChainVector x;
            for (const auto& [id, k] : b0.boundary(g.id).terms()) x.add("t" + id, k);
            d["t" + g.id] = x;
        }
        auto b = FilteredComplex::build(field, Window{}, gens, d);
        Barcode joined = barcode(a);
        auto bb = barcode(b);
        joined.insert(joined.end(), bb.begin(), bb.end());
        CHECK(barcode(a.direct_sum(b)) == sorted(joined));
        CHECK(barcode(a.change_basis(random_action_preserving_matrix(a, rng))) == barcode(a));
    }
}

TEST_CASE("persisting_count and endpoints_at") {
    Barcode b{bar(1, Action(2), 0), bar(1, Action::pos_inf(), 0)};
    CHECK(persisting_count(b, Action(Rational(3, 2))) == 2);
    CHECK(persisting_count(b, Action(2)) == 1);
    CHECK(persisting_count(b, Action(Rational(3, 2)), Action(1)) == 0);
    Barcode single{bar(1, Action(2), 0)};
    CHECK(endpoints_at(single, Action(1)) == 1);
    CHECK(endpoints_at(single, Action(2)) == 1);
    CHECK(endpoints_at(single, Action(Rational(3, 2))) == 0);
    CHECK(endpoints_at(Barcode{bar(1, Action::pos_inf(), 0)}, Action(1)) == 1);
}

TEST_CASE("endpoint count equals generator count") {
    Rng rng(24);
    for (int i = 0; i < 60; ++i) {
        auto c = random_complex(fields()[i % 3], rng);
        auto bars = barcode(c);
        std::size_t total = 0;
        for (const auto& v : oracle::distinct_actions(c)) total += endpoints_at(bars, Action(v));
        CHECK(total == c.size());
    }
}

TEST_CASE("persisting_count matches image ranks") {
    Rng rng(25);
    for (int i = 0; i < 40; ++i) {
        auto c = random_complex(fields()[i % 3], rng);
        auto bars = barcode(c);
        for (int trial = 0; trial < 5; ++trial) {
            Rational lo(ratio(uniform(rng, 0, 44), 4)), hi(ratio(uniform(rng, 0, 44), 4));
            if (hi < lo) std::swap(lo, hi);
            Rational probe = hi + Rational(1, 8);
            for (int d : c.degrees()) {
                Barcode in_degree;
                for (const auto& b : bars)
                    if (b.degree == d) in_degree.push_back(b);
                auto expected = oracle::image_rank(c, d, Action(lo), Action(probe));
                CHECK(persisting_count(in_degree, Action(probe), Action(lo)) == expected);
                CHECK(inclusion_rank(c, d, Action(lo), Action(probe)) == expected);
            }
        }
    }
}

TEST_CASE("long_bar_witness") {
    CHECK(long_bar_witness({}, 3).empty());
    Barcode b{bar(0, Action(3), 0), bar(0, Action::pos_inf(), 0), bar(0, Action(1), 1)};
    CHECK(long_bar_witness(b, 3).size() == 2);
}

TEST_CASE("extract and recover") {
    Barcode b{bar(1, Action(2), 0), bar(1, Action::pos_inf(), 0), bar(3, Action::pos_inf(), 1)};
    auto table = extract(b);
    CHECK(table.critical_values == std::vector<Rational>{1, 2, 3});
    CHECK(recover(table) == intervals(b));
    CHECK(recover(PersistenceTable{}).empty());
    CHECK(table.probes() == std::vector<Rational>{Rational(3, 2), Rational(5, 2), 4});
}

TEST_CASE("recover rejects inconsistent tables") {
    PersistenceTable t;
    t.critical_values = {1, 2, 3};
    t.counts = {{1, 2, 2}, {0, 0}, {0}};
    CHECK_THROWS_AS(recover(t), Error);
    PersistenceTable shape;
    shape.critical_values = {1, 2};
    shape.counts = {{1}};
    CHECK_THROWS_AS(recover(shape), Error);
}

TEST_CASE("recover roundtrip on random barcodes") {
    Rng rng(26);
    for (int i = 0; i < 200; ++i) {
        auto b = random_barcode(rng);
        CHECK(recover(extract(b)) == intervals(b));
    }
}
