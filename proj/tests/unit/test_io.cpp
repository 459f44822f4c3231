#include <cstdio>
#include <fstream>
#include <set>

#include "kul/config.hpp"
#include "kul/error.hpp"
#include "kul/expr.hpp"
#include "kul/k3picard.hpp"
#include "kul/lift.hpp"
#include "kul/replay.hpp"
#include "kul/serialize.hpp"
#include "support.hpp"

using namespace kul;
using testing::gram2;
using testing::iv;
using testing::q;

TEST_SUITE("io") {
  TEST_CASE("class expressions") {
    const VarietyModel k3 = make_variety_model(VarietyKind::QuarticK3, gram2(4, 1, -2));
    const GradedClass o_x = k3.point();
    CHECK(parse_class(k3, "O_x") == o_x);
    CHECK(parse_class(k3, "O_pt") == o_x);
    CHECK(parse_class(k3, "I_x") == k3.unit() - o_x);
    CHECK(parse_class(k3, "O_X") == k3.unit());
    CHECK(parse_class(k3, "O(H)") == ch_line_bundle(k3, k3.hyperplane()));
    CHECK(parse_class(k3, "O(-H)") == dual_ch(k3, parse_class(k3, "O(H)")));
    CHECK(parse_class(k3, "O(L-H)") == ch_line_bundle(k3, k3.named("L") - k3.hyperplane()));
    CHECK(parse_class(k3, "O(2H)") == ch_line_bundle(k3, 2 * k3.hyperplane()));
    CHECK(parse_class(k3, "O_L") == k3.named("L") + o_x);
    CHECK(parse_class(k3, "O_H") == k3.hyperplane() - 2 * o_x);
    CHECK(parse_class(k3, "2 O_x - 3*I_x") == 2 * o_x - 3 * (k3.unit() - o_x));
    CHECK(parse_class(k3, "O_x[1]") == -o_x);
    CHECK(parse_class(k3, "O_x[2]") == o_x);
    CHECK(parse_class(k3, "0").is_zero());
    CHECK(parse_class(k3, "  O_x  ") == o_x);

    const VarietyModel qds = make_variety_model(VarietyKind::QuarticDoubleSolid);
    const KuBasis mu = mu_basis(qds);
    CHECK(parse_class(qds, "mu(1,0)") == mu.basis_ch[0]);
    CHECK(parse_class(qds, "mu(2,-3)") == 2 * mu.basis_ch[0] - 3 * mu.basis_ch[1]);
    const VarietyModel gm3 = make_variety_model(VarietyKind::GM3fold);
    CHECK(parse_class(gm3, "Uv") == ch_tautological_dual(gm3));
    CHECK(parse_class(gm3, "U^v") == ch_tautological_dual(gm3));
    CHECK(parse_class(gm3, "U") == dual_ch(gm3, ch_tautological_dual(gm3)));
    CHECK(parse_class(gm3, "kappa(0,1)") == kappa_basis(gm3).basis_ch[1]);
  }

  TEST_CASE("malformed expressions") {
    const VarietyModel k3 = make_variety_model(VarietyKind::QuarticK3);
    for (const char* bad : {"", "O(", "O(L)", "Q", "3", "O_x +", "mu(1,0)", "O_x[", "O(H", "2 2 O_x", "O_L"}) {
      CAPTURE(bad);
      CHECK_THROWS_AS(parse_class(k3, bad), InputError);
    }
    try {
      parse_class(k3, "O_x + Q");
      FAIL("expected a parse error");
    } catch (const InputError& e) {
      CHECK(std::string(e.what()).find("column 7") != std::string::npos);
    }
  }

  TEST_CASE("gram parsing") {
    CHECK(parse_gram("4") == IntMatrix{{4}});
    CHECK(parse_gram("4,1,1,-2") == gram2(4, 1, -2));
    CHECK(parse_gram(" 10, 7, 7, 2 ") == gram2(10, 7, 2));
    CHECK_THROWS_AS(parse_gram("1,2,3"), InputError);
    CHECK_THROWS_AS(parse_gram("1/2"), InputError);
    CHECK_THROWS_AS(parse_gram(""), InputError);
    CHECK_THROWS_AS(parse_gram("a,b,c,d"), InputError);
  }

  TEST_CASE("config parsing and resolution") {
    const Json j = Json::parse(R"({
      "varieties": {"k3line": {"kind": "quartic-k3", "gram": [[4,1],[1,-2]]}},
      "setups": {"gm3-x7": {"kind": "gm3", "gram": [[10,7],[7,2]]}},
      "box": 9
    })");
    const Config c = parse_config(j);
    CHECK(c.box == 9);
    REQUIRE(c.varieties.count("k3line"));
    CHECK(c.varieties.at("k3line").gram == gram2(4, 1, -2));
    REQUIRE(c.setups.count("gm3-x7"));
    CHECK(c.setups.at("gm3-x7").kind == SetupKind::GM3);

    const CoverSetup s = resolve_setup("gm3-x7", std::nullopt, &c);
    CHECK(*s.source.picard_gram() == gram2(10, 7, 2));
    CHECK(*resolve_setup("gm3-x7", gram2(10, 9, 2), &c).source.picard_gram() == gram2(10, 9, 2));
    CHECK(*resolve_setup("qds-line", std::nullopt).source.picard_gram() == gram2(4, 1, -2));
    CHECK(resolve_setup("gm4", std::nullopt).kind == SetupKind::GM4);
    CHECK(*resolve_variety("k3line", std::nullopt, &c).picard_gram() == gram2(4, 1, -2));
    CHECK(resolve_variety("p3", std::nullopt).dim() == 3);
    CHECK_THROWS_AS(resolve_setup("nope", std::nullopt), InputError);
    CHECK_THROWS_AS(resolve_variety("nope", std::nullopt), InputError);

    const Config back = parse_config(to_json(c));
    CHECK(to_json(back) == to_json(c));
  }

  TEST_CASE("malformed configs") {
    for (const char* text : {R"([])", R"({"setups": {"x": {"gram": [[4]]}}})", R"({"setups": {"x": {"kind": "p9"}}})",
                             R"({"varieties": {"x": {"kind": "quartic-k3", "gram": [[4,1],[2,-2]]}}})",
                             R"({"box": "big"})", R"({"box": 0})"}) {
      CAPTURE(text);
      CHECK_THROWS_AS(parse_config(Json::parse(text)), InputError);
    }
    CHECK_THROWS_AS(load_config("/nonexistent/kul-config.json"), InputError);
  }

  TEST_CASE("config files and intersection overrides") {
    const std::string path = "kul_test_config.json";
    {
      std::ofstream out(path);
      out << R"({"varieties": {"bad-p3": {"kind": "p3",
                  "overrides": [{"a": "H", "b": "H", "product": {"l": 2}}]}}})";
    }
    const Config c = load_config(path);
    std::remove(path.c_str());
    const VarietyModel bad = resolve_variety("bad-p3", std::nullopt, &c);
    const VarietyModel good = make_variety_model(VarietyKind::P3);
    CHECK(integrate(bad, bad.hyperplane() * bad.hyperplane() * bad.hyperplane()) == 2);
    CHECK(integrate(good, good.hyperplane() * good.hyperplane() * good.hyperplane()) == 1);
    const Json round = to_json(c.varieties.at("bad-p3"));
    CHECK(to_json(variety_spec_from_json(round)) == round);
  }

  TEST_CASE("JSON round trips") {
    for (const char* z : {"0", "-7", "123456789012345678901234567890"}) {
      const Integer v(z);
      CHECK(integer_from_json(to_json(v)) == v);
    }
    CHECK(to_json(Integer(5)).is_number_integer());
    CHECK(to_json(Integer("123456789012345678901234567890")).is_string());
    for (const Rational& r : {q(0), q(-3, 4), q(7)}) CHECK(rational_from_json(to_json(r)) == r);
    CHECK(int_vector_from_json(to_json(iv({1, -2, 3}))) == iv({1, -2, 3}));
    CHECK(int_matrix_from_json(to_json(gram2(4, 1, -2))) == gram2(4, 1, -2));
    const KnumClass k{"kappa", iv({3, -1})};
    CHECK(knum_from_json(to_json(k)) == k);
    const MukaiVector m = MukaiVector::from_coordinates(gram2(4, 1, -2), iv({1, 2, -1, 5}));
    CHECK(mukai_from_json(to_json(m)) == m);
    CHECK_THROWS_AS(integer_from_json(Json("x1")), InputError);
    CHECK_THROWS_AS(int_matrix_from_json(Json::parse("[[1,2],[3]]")), InputError);
  }

  TEST_CASE("report JSON carries the documented fields") {
    const Json c = to_json(closed_form_lift_gm3(1, 1));
    for (const char* key : {"fano_type", "v", "lifted", "v_primitive", "multiplicity", "gram", "x", "w", "w_square",
                            "formula_w_square", "branch", "applicable_branches", "nonneg_ok", "wall_ok"})
      CHECK(c.contains(key));
    CHECK(c["x"] == 7);
    CHECK(c["w_square"] == -2);
    CHECK(to_json(closed_form_lift_qds(2, 0))["x"].is_null());

    const Json r = to_json(validate_lattice(gram2(10, 7, 2), LatticeFamily::GM_x2));
    CHECK(r["verdict"] == true);
    CHECK(r["family"] == "10-x-2");

    const Json img = to_json(image_lattice(phi_matrix(make_qds_setup())));
    CHECK(img["index"] == 2);
    const Json g = to_json(make_gm3_setup().target.unit());
    CHECK(g["model"].is_string());
    CHECK(g["terms"].size() == 1);
  }

  TEST_CASE("reference replay") {
    const VerificationReport all = verify_reference_values();
    CHECK(all.checks.size() == reference_check_ids().size());
    CHECK(all.checks.size() >= 100);
    for (const Check& c : all.checks) {
      CAPTURE(c.id);
      CAPTURE(c.expected);
      CAPTURE(c.computed);
      CHECK(c.pass);
    }
    const std::vector<std::string> listed = reference_check_ids();
    const std::set<std::string> ids(listed.begin(), listed.end());
    CHECK(ids.size() == listed.size());

    const VerificationReport qds = verify_reference_values("^qds\\.");
    CHECK(!qds.checks.empty());
    CHECK(qds.checks.size() < all.checks.size());
    for (const Check& c : qds.checks) CHECK(c.id.rfind("qds.", 0) == 0);
    CHECK(verify_reference_values("no-such-check").checks.empty());
    CHECK_THROWS_AS(verify_reference_values("(unclosed"), InputError);

    const Json a = to_json(verify_reference_values("gm4"));
    const Json b = to_json(verify_reference_values("gm4"));
    CHECK(a == b);
    CHECK(to_text(verify_reference_values("gm4")).find("gm4.") != std::string::npos);
  }
}
