#include <doctest.h>

#include <cmath>
#include <numbers>
#include <string>

#include "vsckin/config.hpp"
#include "vsckin/error.hpp"

using namespace vsckin;

namespace {

std::string config_path(const std::string& name) {
  return std::string(VSCKIN_CONFIG_DIR) + "/" + name;
}

const char* kMinimal = R"({
  "energy_unit": "hbar_omega_v",
  "species": [{"label": "A", "energy": 0}, {"label": "B", "energy": -0.5, "displacement": 1}],
  "couplings": [{"between": ["A", "B"], "J": 0.01, "lambda_s": 0.1}]
})";

std::string replace(std::string s, const std::string& from, const std::string& to) {
  const auto pos = s.find(from);
  REQUIRE(pos != std::string::npos);
  return s.replace(pos, from.size(), to);
}

}  // namespace

TEST_SUITE("config") {
  TEST_CASE("bundled reaction 1 holds the tabulated parameters") {
    const ScenarioConfig c = load_config(config_path("reaction1.json"));
    const auto& net = c.network;
    const double w = 2000.0;
    CHECK(net.omega_v() == w);
    CHECK(net.species(0).energy == 0.0);
    CHECK(net.species(0).displacement == 0.0);
    CHECK(net.species(1).energy == doctest::Approx(-0.6 * w));
    CHECK(net.species(1).displacement == 1.5);
    CHECK(net.coupling(0, 1)->J == doctest::Approx(0.01 * w));
    CHECK(net.coupling(0, 1)->lambda_s == doctest::Approx(0.08 * w));
    CHECK(c.reactant == "A");
    CHECK(c.energy_unit == EnergyUnit::kHbarOmegaV);
  }

  TEST_CASE("bundled reactions 2 and 3") {
    const double w = 2000.0;
    const ScenarioConfig r2 = load_config(config_path("reaction2.json"));
    CHECK(r2.network.species(1).energy == doctest::Approx(0.95 * w));
    CHECK(r2.network.species(1).displacement == 1.0);
    CHECK(r2.network.coupling(0, 1)->J == doctest::Approx(0.002 * w));
    CHECK(r2.network.coupling(0, 1)->lambda_s == doctest::Approx(0.05 * w));

    const ScenarioConfig r3 = load_config(config_path("reaction3.json"));
    const auto& n = r3.network;
    CHECK(n.species(1).energy == doctest::Approx(-1.05 * w));
    CHECK(n.species(2).energy == doctest::Approx(-1.35 * w));
    CHECK(n.species(1).displacement == 1.5);
    CHECK(n.species(2).displacement == 4.5);
    CHECK(n.coupling(0, 1)->J == doctest::Approx(0.0003 * w));
    CHECK(n.coupling(1, 2)->J == doctest::Approx(0.02 * w));
    CHECK(n.coupling(0, 1)->lambda_s == doctest::Approx(0.05 * w));
    CHECK(n.coupling(1, 2)->lambda_s == doctest::Approx(0.3 * w));
    CHECK_FALSE(n.coupling(0, 2).has_value());
  }

  TEST_CASE("both energy conventions load the same scenario") {
    for (int r = 1; r <= 3; ++r) {
      CAPTURE(r);
      ScenarioConfig a = load_config(config_path("reaction" + std::to_string(r) + ".json"));
      ScenarioConfig b = load_config(config_path("reaction" + std::to_string(r) + "_cm.json"));
      CHECK(b.energy_unit == EnergyUnit::kWavenumber);
      a.name = b.name;
      a.energy_unit = b.energy_unit;
      const auto ja = config_to_json(a);
      const auto jb = config_to_json(b);
      for (std::size_t s = 0; s < a.network.species_count(); ++s) {
        CHECK(a.network.species(s).energy == doctest::Approx(b.network.species(s).energy).epsilon(1e-14));
      }
      CHECK(a.cavity.g == b.cavity.g);
      CHECK(a.bath.omega_cut == doctest::Approx(b.bath.omega_cut).epsilon(1e-14));
      CHECK(ja.dump() == jb.dump());
    }
  }

  TEST_CASE("defaults fill omitted cavity, bath and grid blocks") {
    const ScenarioConfig c = parse_config(kMinimal);
    CHECK(c.network.omega_v() == 2000.0);
    CHECK(c.cavity.omega_c == 2000.0);
    CHECK(c.cavity.g == doctest::Approx(0.03 * 2000.0 / std::numbers::sqrt2));
    CHECK(c.cavity.kappa == 1.0);
    CHECK(c.bath.gamma == 0.01);
    CHECK(c.bath.eta == 0.001);
    CHECK(c.bath.omega_cut == doctest::Approx(200.0));
    CHECK(c.bath.temperature == 298.0);
    CHECK(c.regime == RegimeKind::kVsc);
    CHECK(c.reactant == "A");
    CHECK(c.grid.build().size() == 400);
    CHECK(c.method == PropagationMethod::kPade);
    CHECK(c.network.coupling(0, 1)->J == doctest::Approx(20.0));
  }

  TEST_CASE("validation failures name the violated invariant") {
    auto message = [](const std::string& text) {
      try {
        parse_config(text);
      } catch (const ValidationError& e) {
        return std::string(e.what());
      }
      return std::string();
    };
    CHECK(message(replace(kMinimal, "\"lambda_s\": 0.1", "\"lambda_s\": -0.1")).find("lambda_s") !=
          std::string::npos);
    CHECK(message(replace(kMinimal, "\"energy_unit\"", "\"energy_units\"")).find("unknown key") !=
          std::string::npos);
    CHECK(message(replace(kMinimal, "\"hbar_omega_v\"", "\"eV\"")).find("energy_unit") !=
          std::string::npos);
    CHECK(message(replace(kMinimal, "{\n  \"energy_unit\"", "{\"reactant\": \"Z\", \"energy_unit\""))
              .find("Z") != std::string::npos);
    CHECK(message(replace(kMinimal, "\"couplings\"", "\"bath\": {\"temperature\": -1}, \"couplings\""))
              .find("temperature") != std::string::npos);
    CHECK(message(replace(kMinimal, "\"couplings\"", "\"cavity\": {\"kappa\": -1}, \"couplings\""))
              .find("kappa") != std::string::npos);
    CHECK(message(replace(kMinimal, "\"couplings\"", "\"grid\": {\"t_start\": 5, \"t_end\": 1}, \"couplings\""))
              .find("grid") != std::string::npos);
    CHECK(message(replace(kMinimal, "\"couplings\"", "\"regime\": \"strong\", \"couplings\""))
              .find("regime") != std::string::npos);
    CHECK(message(replace(kMinimal, "\"energy\": 0}", "\"energy\": \"zero\"}")).find("number") !=
          std::string::npos);
    CHECK(message("{\"couplings\": []}").find("species") != std::string::npos);
  }

  TEST_CASE("syntax errors report line and column") {
    try {
      parse_config("{\n  \"species\": [\n    {\"label\": \"A\",, }\n  ]\n}");
      FAIL("expected a parse error");
    } catch (const ValidationError& e) {
      const std::string m = e.what();
      CHECK(m.find("line 3") != std::string::npos);
      CHECK(m.find("column") != std::string::npos);
    }
  }

  TEST_CASE("missing files raise an I/O error naming the path") {
    try {
      load_config("/nonexistent/dir/cfg.json");
      FAIL("expected an I/O error");
    } catch (const IoError& e) {
      CHECK(std::string(e.what()).find("/nonexistent/dir/cfg.json") != std::string::npos);
    }
  }

  TEST_CASE("canonical form round-trips") {
    ScenarioConfig c = load_config(config_path("reaction3.json"));
    c.grid.spacing = GridSpacing::kCustom;
    c.grid.custom = {0.0, 1.0, 10.0};
    c.method = PropagationMethod::kUniformized;
    c.regime = RegimeKind::kWeak;
    const auto doc = config_to_json(c);
    const ScenarioConfig back = config_from_json(doc);
    CHECK(config_to_json(back).dump() == doc.dump());
    CHECK(config_fingerprint(back) == config_fingerprint(c));
    CHECK(back.grid.custom == c.grid.custom);
    CHECK(back.regime == RegimeKind::kWeak);
    ScenarioConfig other = c;
    other.bath.eta = 0.0;
    CHECK(config_fingerprint(other) != config_fingerprint(c));
  }

  TEST_CASE("fingerprint hash") {
    CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
    CHECK(config_fingerprint(parse_config(kMinimal)).size() == 16);
  }
}
