#include "godeaux/datasets.hpp"
#include "godeaux/instance.hpp"

#include <doctest.h>

#include <json.hpp>

#include <functional>

using namespace godeaux;

namespace {

std::string mutated(const std::function<void(nlohmann::json&)>& edit) {
  nlohmann::json j = nlohmann::json::parse(default_instance_text());
  edit(j);
  return j.dump();
}

}  // namespace

TEST_SUITE("instance") {

TEST_CASE("compiled-in data matches the data directory") {
  const std::string dir = GODEAUX_DATA_DIR;
  CHECK(read_file(dir + "/godeaux.json") == default_instance_text());
  CHECK(read_file(dir + "/topology.json") == default_topology_text());
  CHECK(read_file(dir + "/defcalc.json") == default_defcalc_text());
}

TEST_CASE("shipped instance") {
  const Instance inst = default_instance();
  CHECK(inst.ring->names() == std::vector<std::string>{"x1", "x2", "y", "z"});
  CHECK(inst.ring->weights() == std::vector<int>{1, 1, 2, 3});
  CHECK(inst.modulus.degree() == 6);
  CHECK(inst.generators.size() == 13);
  CHECK(inst.residue_images.size() == 4);
  CHECK(inst.tricanonical_form.has_value());
  CHECK(inst.witnesses.at(2).size() == 4);
  CHECK(inst.expected.codimension == 10);
}

TEST_CASE("plurigenera") {
  const SurfaceInvariants s;
  CHECK(s.plurigenus(0) == 1);
  CHECK(s.plurigenus(1) == 0);
  CHECK(s.plurigenus(2) == 2);
  CHECK(s.plurigenus(12) == 67);
}

TEST_CASE("corrupt instances are rejected") {
  CHECK_THROWS_AS(parse_instance("{"), InstanceError);
  CHECK_THROWS_AS(parse_instance(mutated([](auto& j) { j.erase("modulus"); })), InstanceError);
  CHECK_THROWS_AS(parse_instance(mutated([](auto& j) { j["modulus"] = "z^2 + x1"; })), InstanceError);
  CHECK_THROWS(parse_instance(mutated([](auto& j) { j["modulus"] = "z^2 +* x1"; })));
  CHECK_THROWS(parse_instance(mutated([](auto& j) { j["residue_images"]["y"] = {"a1", "a2"}; })));
  CHECK_THROWS(parse_instance(mutated([](auto& j) { j["ring"]["weights"] = {1, 1, 2}; })));
  CHECK_THROWS(parse_instance(mutated([](auto& j) { j["base_locus"]["witnesses"]["2"][0] = {"0", "1"}; })));
  CHECK_THROWS_AS(load_instance("/nonexistent/instance.json"), InstanceError);
}

}
