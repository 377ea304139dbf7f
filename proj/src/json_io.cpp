#include "ddp/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace ddp {

using nlohmann::json;

namespace {

std::int64_t get_int(const json& j, const char* key) {
  if (!j.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
  const json& v = j.at(key);
  if (!v.is_number_integer()) throw std::invalid_argument(std::string("field '") + key + "' must be an integer");
  return v.get<std::int64_t>();
}

json interval_json(const Interval& iv) { return json::array({iv.lo, iv.hi}); }

Interval interval_from(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    throw std::invalid_argument("interval must be [lo, hi] integers");
  return {j[0].get<Time>(), j[1].get<Time>()};
}

}  // namespace

json to_json(const Instance& inst) {
  json out;
  out["budget"] = inst.budget;
  out["deliveries"] = json::array();
  for (const Delivery& d : inst.deliveries)
    out["deliveries"].push_back({{"id", d.id}, {"t_launch", d.span.lo}, {"t_rendezvous", d.span.hi}, {"cost", d.cost}});
  out["stations"] = json::array();
  for (const Station& s : inst.stations) {
    json js = {{"id", s.id},
               {"t_arrive", s.span.lo},
               {"t_depart", s.span.hi},
               {"mode", s.mode == StationMode::Swap ? "swap" : "charge"}};
    if (s.rate) {
      if (s.rate->den() == 1)
        js["rate"] = s.rate->num();
      else
        js["rate"] = json::array({s.rate->num(), s.rate->den()});
    }
    out["stations"].push_back(js);
  }
  return out;
}

Instance instance_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("instance must be a JSON object");
  Instance inst;
  inst.budget = get_int(j, "budget");
  if (j.contains("deliveries")) {
    if (!j["deliveries"].is_array()) throw std::invalid_argument("'deliveries' must be an array");
    for (const json& d : j["deliveries"]) {
      Delivery del;
      del.id = static_cast<int>(get_int(d, "id"));
      del.span = {get_int(d, "t_launch"), get_int(d, "t_rendezvous")};
      del.cost = get_int(d, "cost");
      inst.deliveries.push_back(del);
    }
  }
  if (j.contains("stations")) {
    if (!j["stations"].is_array()) throw std::invalid_argument("'stations' must be an array");
    for (const json& s : j["stations"]) {
      Station st;
      st.id = static_cast<int>(get_int(s, "id"));
      st.span = {get_int(s, "t_arrive"), get_int(s, "t_depart")};
      const std::string mode = s.value("mode", std::string("swap"));
      if (mode == "swap")
        st.mode = StationMode::Swap;
      else if (mode == "charge")
        st.mode = StationMode::Charge;
      else
        throw std::invalid_argument("station mode must be 'swap' or 'charge'");
      if (s.contains("rate")) {
        const json& r = s["rate"];
        if (r.is_number_integer())
          st.rate = Rational(r.get<std::int64_t>());
        else if (r.is_array() && r.size() == 2 && r[0].is_number_integer() && r[1].is_number_integer())
          st.rate = Rational(r[0].get<std::int64_t>(), r[1].get<std::int64_t>());
        else
          throw std::invalid_argument("rate must be an integer or [num, den]");
      }
      inst.stations.push_back(st);
    }
  }
  std::sort(inst.deliveries.begin(), inst.deliveries.end(),
            [](const Delivery& a, const Delivery& b) { return a.id < b.id; });
  std::sort(inst.stations.begin(), inst.stations.end(), [](const Station& a, const Station& b) { return a.id < b.id; });
  return inst;
}

json to_json(const Schedule& sched) {
  json out;
  out["drones"] = json::array();
  for (const DroneAssignment& a : sched.drones) {
    json services = json::array();
    for (const Service& s : a.services) services.push_back({{"station", s.station}, {"interval", interval_json(s.span)}});
    out["drones"].push_back({{"drone", a.drone}, {"deliveries", a.deliveries}, {"services", services}});
  }
  out["drones_used"] = sched.drone_count();
  return out;
}

Schedule schedule_from_json(const json& j) {
  if (!j.is_object() || !j.contains("drones") || !j["drones"].is_array())
    throw std::invalid_argument("schedule must be an object with a 'drones' array");
  Schedule sched;
  for (const json& a : j["drones"]) {
    DroneAssignment da;
    da.drone = static_cast<int>(get_int(a, "drone"));
    if (a.contains("deliveries")) {
      for (const json& id : a["deliveries"]) {
        if (!id.is_number_integer()) throw std::invalid_argument("delivery ids must be integers");
        da.deliveries.push_back(id.get<int>());
      }
    }
    if (a.contains("services")) {
      for (const json& s : a["services"]) da.services.push_back({static_cast<int>(get_int(s, "station")), interval_from(s.at("interval"))});
    }
    sched.drones.push_back(std::move(da));
  }
  return sched;
}

namespace {
json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}
}  // namespace

Instance load_instance(const std::string& path) { return instance_from_json(read_file(path)); }
Schedule load_schedule(const std::string& path) { return schedule_from_json(read_file(path)); }

void save_json(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace ddp
