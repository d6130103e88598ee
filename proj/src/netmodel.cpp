#include "hypergames/netmodel.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "hypergames/errors.hpp"

namespace hypergames {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw model_error("load_network: " + where + ": " + what);
}

const json& need(const json& obj, const std::string& where, const std::string& key) {
  if (!obj.is_object()) fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, "missing key '" + key + "'");
  return *it;
}

int need_int(const json& obj, const std::string& where, const std::string& key) {
  const json& v = need(obj, where, key);
  if (!v.is_number_integer()) fail(where + "." + key, "expected an integer");
  return v.get<int>();
}

std::vector<int> int_list(const json& v, const std::string& where) {
  if (!v.is_array()) fail(where, "expected an array of integers");
  std::vector<int> out;
  for (const auto& e : v) {
    if (!e.is_number_integer()) fail(where, "expected an array of integers");
    out.push_back(e.get<int>());
  }
  return out;
}

void reject_unknown(const json& obj, const std::string& where,
                    std::initializer_list<const char*> keys) {
  if (!obj.is_object()) fail(where, "expected an object");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (std::find_if(keys.begin(), keys.end(),
                     [&](const char* k) { return it.key() == k; }) == keys.end())
      fail(where, "unknown key '" + it.key() + "'");
  }
}

std::vector<std::pair<int, int>> edge_list(const NetworkModel& model, const json& v,
                                           const std::string& where) {
  if (!v.is_array()) fail(where, "expected an array of [from, to] pairs");
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string ew = where + "[" + std::to_string(i) + "]";
    const auto pair = int_list(v[i], ew);
    if (pair.size() != 2) fail(ew, "expected a [from, to] pair");
    for (int h : pair)
      if (model.host_index(h) < 0) fail(ew, "unknown host " + std::to_string(h));
    out.emplace_back(pair[0], pair[1]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int svc_slot(const Host& host, int service) {
  auto it = std::find(host.services.begin(), host.services.end(), service);
  return it == host.services.end() ? -1 : static_cast<int>(it - host.services.begin());
}

}  // namespace

int NetworkModel::host_index(int id) const {
  for (std::size_t i = 0; i < hosts.size(); ++i)
    if (hosts[i].id == id) return static_cast<int>(i);
  return -1;
}

NetworkModel load_network(const json& doc) {
  reject_unknown(doc, "document",
                 {"hosts", "connectivity", "vulns", "decoys", "attacker", "defender",
                  "objectives"});
  NetworkModel m;

  const json& hosts = need(doc, "document", "hosts");
  if (!hosts.is_array() || hosts.empty()) fail("document.hosts", "expected a nonempty array");
  for (std::size_t i = 0; i < hosts.size(); ++i) {
    const std::string where = "document.hosts[" + std::to_string(i) + "]";
    reject_unknown(hosts[i], where, {"id", "services", "noncritical"});
    Host h;
    h.id = need_int(hosts[i], where, "id");
    if (h.id < 0) fail(where + ".id", "negative host id");
    if (m.host_index(h.id) >= 0) fail(where + ".id", "duplicate host id " + std::to_string(h.id));
    h.services = int_list(need(hosts[i], where, "services"), where + ".services");
    std::set<int> seen(h.services.begin(), h.services.end());
    if (seen.size() != h.services.size()) fail(where + ".services", "duplicate service");
    if (hosts[i].contains("noncritical")) {
      h.noncritical = int_list(hosts[i]["noncritical"], where + ".noncritical");
      for (int s : h.noncritical)
        if (!seen.count(s))
          fail(where + ".noncritical",
               "service " + std::to_string(s) + " is not a service of host " +
                   std::to_string(h.id));
    }
    m.hosts.push_back(std::move(h));
  }
  std::sort(m.hosts.begin(), m.hosts.end(),
            [](const Host& a, const Host& b) { return a.id < b.id; });

  const json& conn = need(doc, "document", "connectivity");
  if (conn.is_array()) {
    m.topology_names.push_back("default");
    m.topologies.push_back(edge_list(m, conn, "document.connectivity"));
  } else if (conn.is_object()) {
    if (conn.empty()) fail("document.connectivity", "expected at least one topology");
    for (auto it = conn.begin(); it != conn.end(); ++it) m.topology_names.push_back(it.key());
    std::sort(m.topology_names.begin(), m.topology_names.end());
    for (const auto& name : m.topology_names)
      m.topologies.push_back(edge_list(m, conn.at(name), "document.connectivity." + name));
  } else {
    fail("document.connectivity", "expected an edge array or a name-to-edges object");
  }

  if (doc.contains("vulns")) {
    const json& vulns = doc["vulns"];
    if (!vulns.is_array()) fail("document.vulns", "expected an array");
    std::set<int> service_pool;
    for (const Host& h : m.hosts) service_pool.insert(h.services.begin(), h.services.end());
    for (std::size_t i = 0; i < vulns.size(); ++i) {
      const std::string where = "document.vulns[" + std::to_string(i) + "]";
      reject_unknown(vulns[i], where,
                     {"id", "service", "pre_credential", "post_credential", "stops_service"});
      Vulnerability v;
      v.id = need_int(vulns[i], where, "id");
      for (const Vulnerability& prev : m.vulns)
        if (prev.id == v.id) fail(where + ".id", "duplicate vulnerability id");
      v.service = need_int(vulns[i], where, "service");
      if (!service_pool.count(v.service))
        fail(where + ".service", "service " + std::to_string(v.service) + " runs on no host");
      v.pre_credential = need_int(vulns[i], where, "pre_credential");
      v.post_credential = need_int(vulns[i], where, "post_credential");
      if (v.pre_credential < 1 || v.pre_credential > 2)
        fail(where + ".pre_credential", "expected 1 (user) or 2 (root)");
      if (v.post_credential < 1 || v.post_credential > 2)
        fail(where + ".post_credential", "expected 1 (user) or 2 (root)");
      if (vulns[i].contains("stops_service")) {
        if (!vulns[i]["stops_service"].is_boolean())
          fail(where + ".stops_service", "expected a boolean");
        v.stops_service = vulns[i]["stops_service"].get<bool>();
      }
      m.vulns.push_back(v);
    }
  }

  if (doc.contains("decoys")) {
    m.decoys = int_list(doc["decoys"], "document.decoys");
    std::sort(m.decoys.begin(), m.decoys.end());
    m.decoys.erase(std::unique(m.decoys.begin(), m.decoys.end()), m.decoys.end());
    for (int d : m.decoys) {
      int idx = m.host_index(d);
      if (idx < 0) fail("document.decoys", "unknown host " + std::to_string(d));
      m.hosts[idx].is_decoy = true;
    }
  }

  const json& att = need(doc, "document", "attacker");
  reject_unknown(att, "document.attacker", {"start", "credential"});
  m.attacker_start = need_int(att, "document.attacker", "start");
  if (m.host_index(m.attacker_start) < 0)
    fail("document.attacker.start", "unknown host " + std::to_string(m.attacker_start));
  m.attacker_credential = att.contains("credential")
                              ? need_int(att, "document.attacker", "credential")
                              : 1;
  if (m.attacker_credential < 1 || m.attacker_credential > 2)
    fail("document.attacker.credential", "expected 1 (user) or 2 (root)");

  if (doc.contains("defender")) {
    reject_unknown(doc["defender"], "document.defender", {"actions"});
    const json& acts = need(doc["defender"], "document.defender", "actions");
    if (!acts.is_array()) fail("document.defender.actions", "expected an array");
    for (const auto& a : acts) {
      if (!a.is_string()) fail("document.defender.actions", "expected strings");
      const std::string s = a.get<std::string>();
      if (s == "suspend")
        m.defender_suspend = true;
      else if (s == "restore")
        m.defender_restore = true;
      else if (s == "topology")
        m.defender_topology = true;
      else
        fail("document.defender.actions", "unknown action kind '" + s + "'");
    }
  }
  if (m.defender_topology && m.topologies.size() < 2)
    fail("document.defender.actions", "topology switching needs at least two topologies");

  const json& obj = need(doc, "document", "objectives");
  reject_unknown(obj, "document.objectives", {"defender", "attacker"});
  const json& od = need(obj, "document.objectives", "defender");
  const json& oa = need(obj, "document.objectives", "attacker");
  if (!od.is_string()) fail("document.objectives.defender", "expected a string");
  if (!oa.is_string()) fail("document.objectives.attacker", "expected a string");
  m.objective_defender = od.get<std::string>();
  m.objective_attacker = oa.get<std::string>();

  return m;
}

NetworkModel load_network_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw model_error("load_network: cannot open " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw model_error("load_network: " + path + ": " + e.what());
  }
  return load_network(doc);
}

NetworkState initial_state(const NetworkModel& model) {
  NetworkState st;
  st.turn = Player::P2;
  st.location = model.host_index(model.attacker_start);
  st.topology = 0;
  st.cred.assign(model.hosts.size(), 0);
  st.cred[st.location] = static_cast<uint8_t>(model.attacker_credential);
  std::size_t slots = 0;
  for (const Host& h : model.hosts) slots += h.services.size();
  st.svc.assign(slots, static_cast<uint8_t>(ServiceStatus::running));
  return st;
}

namespace {

std::vector<std::size_t> svc_offsets(const NetworkModel& model) {
  std::vector<std::size_t> off(model.hosts.size() + 1, 0);
  for (std::size_t i = 0; i < model.hosts.size(); ++i)
    off[i + 1] = off[i] + model.hosts[i].services.size();
  return off;
}

}  // namespace

ServiceStatus service_status(const NetworkModel& model, const NetworkState& state, int host_idx,
                             int service) {
  int slot = svc_slot(model.hosts[host_idx], service);
  if (slot < 0) return ServiceStatus::stopped;  // absent services never run
  auto off = svc_offsets(model);
  return static_cast<ServiceStatus>(state.svc[off[host_idx] + slot]);
}

bool vuln_applicable(const NetworkModel& model, const NetworkState& state,
                     const Vulnerability& vuln, int source_id, int target_id) {
  int src = model.host_index(source_id);
  int tgt = model.host_index(target_id);
  if (src < 0 || tgt < 0) return false;
  if (state.location != src) return false;
  const auto& edges = model.topologies[state.topology];
  if (std::find(edges.begin(), edges.end(), std::make_pair(source_id, target_id)) == edges.end())
    return false;
  if (state.cred[src] < vuln.pre_credential) return false;
  return service_status(model, state, tgt, vuln.service) == ServiceStatus::running;
}

NetworkState apply_vuln(const NetworkModel& model, const NetworkState& state,
                        const Vulnerability& vuln, int target_id) {
  int source_id = model.hosts[state.location].id;
  if (!vuln_applicable(model, state, vuln, source_id, target_id))
    throw model_error("apply_vuln: vulnerability " + std::to_string(vuln.id) +
                      " not applicable from host " + std::to_string(source_id) + " to host " +
                      std::to_string(target_id));
  NetworkState next = state;
  int tgt = model.host_index(target_id);
  next.location = tgt;
  next.cred[tgt] = std::max<uint8_t>(next.cred[tgt], static_cast<uint8_t>(vuln.post_credential));
  if (vuln.stops_service) {
    auto off = svc_offsets(model);
    int slot = svc_slot(model.hosts[tgt], vuln.service);
    next.svc[off[tgt] + slot] = static_cast<uint8_t>(ServiceStatus::stopped);
  }
  next.turn = Player::P1;
  return next;
}

namespace {

std::string state_id(const NetworkModel& model, const NetworkState& st) {
  std::ostringstream os;
  os << (st.turn == Player::P1 ? "P1" : "P2");
  os << "|h" << model.hosts[st.location].id;
  os << '|' << model.topology_names[st.topology];
  os << "|c";
  for (uint8_t c : st.cred) os << static_cast<int>(c);
  os << '|';
  auto off = svc_offsets(model);
  for (std::size_t i = 0; i < model.hosts.size(); ++i) {
    if (i) os << '.';
    if (model.hosts[i].services.empty()) os << '-';
    for (std::size_t k = off[i]; k < off[i + 1]; ++k)
      os << "RSX"[st.svc[k]];
  }
  return os.str();
}

std::vector<std::string> labels_for(const NetworkModel& model, const NetworkState& st,
                                    bool true_view) {
  std::vector<std::string> props;
  for (std::size_t i = 0; i < model.hosts.size(); ++i)
    if (st.cred[i] >= 1) props.push_back("p" + std::to_string(model.hosts[i].id));
  if (true_view && model.hosts[st.location].is_decoy) props.push_back("decoy");
  return props;
}

}  // namespace

CompiledNetwork compile_network(const NetworkModel& model, std::size_t cap) {
  ArenaBuilder b;
  std::vector<std::string> ap;
  for (const Host& h : model.hosts) ap.push_back("p" + std::to_string(h.id));
  ap.push_back("decoy");
  b.set_ap(ap);

  // action catalog
  for (const Vulnerability& v : model.vulns)
    for (const Host& h : model.hosts)
      if (svc_slot(h, v.service) >= 0)
        b.add_action("exploit-v" + std::to_string(v.id) + "-h" + std::to_string(h.id),
                     Player::P2);
  b.add_action("skip", Player::P2);
  for (const Host& h : model.hosts)
    for (int s : h.noncritical) {
      const std::string suffix = "-h" + std::to_string(h.id) + "-s" + std::to_string(s);
      if (model.defender_suspend) b.add_action("suspend" + suffix, Player::P1);
      if (model.defender_restore) b.add_action("restore" + suffix, Player::P1);
    }
  if (model.defender_topology)
    for (const std::string& name : model.topology_names) b.add_action("switch-to-" + name, Player::P1);
  b.add_action("noop", Player::P1);

  auto off = svc_offsets(model);
  std::map<std::string, int> seen;
  std::deque<NetworkState> queue;
  std::vector<int> site;

  auto intern = [&](const NetworkState& st) {
    std::string id = state_id(model, st);
    auto it = seen.find(id);
    if (it != seen.end()) return it->second;
    if (seen.size() >= cap)
      throw cap_exceeded_error("compile_network: state cap exceeded (" + std::to_string(cap) +
                               ")");
    int idx = static_cast<int>(seen.size());
    seen.emplace(id, idx);
    b.add_state(id, st.turn);
    b.set_label("true", id, labels_for(model, st, true));
    b.set_label("P2", id, labels_for(model, st, false));
    site.push_back(model.hosts[st.location].id);
    queue.push_back(st);
    return idx;
  };

  NetworkState init = initial_state(model);
  intern(init);
  b.set_initial(state_id(model, init));

  while (!queue.empty()) {
    NetworkState st = queue.front();
    queue.pop_front();
    const std::string from = state_id(model, st);
    int loc_id = model.hosts[st.location].id;

    if (st.turn == Player::P2) {
      for (const Vulnerability& v : model.vulns)
        for (const Host& h : model.hosts)
          if (vuln_applicable(model, st, v, loc_id, h.id)) {
            NetworkState next = apply_vuln(model, st, v, h.id);
            intern(next);
            b.add_transition(from, "exploit-v" + std::to_string(v.id) + "-h" +
                                       std::to_string(h.id),
                             state_id(model, next));
          }
      NetworkState next = st;
      next.turn = Player::P1;
      intern(next);
      b.add_transition(from, "skip", state_id(model, next));
    } else {
      for (std::size_t i = 0; i < model.hosts.size(); ++i)
        for (int s : model.hosts[i].noncritical) {
          int slot = svc_slot(model.hosts[i], s);
          auto status = static_cast<ServiceStatus>(st.svc[off[i] + slot]);
          const std::string suffix =
              "-h" + std::to_string(model.hosts[i].id) + "-s" + std::to_string(s);
          if (model.defender_suspend && status == ServiceStatus::running) {
            NetworkState next = st;
            next.svc[off[i] + slot] = static_cast<uint8_t>(ServiceStatus::suspended);
            next.turn = Player::P2;
            intern(next);
            b.add_transition(from, "suspend" + suffix, state_id(model, next));
          }
          if (model.defender_restore && status == ServiceStatus::suspended) {
            NetworkState next = st;
            next.svc[off[i] + slot] = static_cast<uint8_t>(ServiceStatus::running);
            next.turn = Player::P2;
            intern(next);
            b.add_transition(from, "restore" + suffix, state_id(model, next));
          }
        }
      if (model.defender_topology)
        for (std::size_t t = 0; t < model.topologies.size(); ++t)
          if (static_cast<int>(t) != st.topology) {
            NetworkState next = st;
            next.topology = static_cast<int>(t);
            next.turn = Player::P2;
            intern(next);
            b.add_transition(from, "switch-to-" + model.topology_names[t],
                             state_id(model, next));
          }
      NetworkState next = st;
      next.turn = Player::P2;
      intern(next);
      b.add_transition(from, "noop", state_id(model, next));
    }
  }

  CompiledNetwork out{b.build(), {}, model.decoys};
  // builder preserves insertion order, so the site vector lines up by index
  out.site = std::move(site);
  return out;
}

Arena compile_arena(const NetworkModel& model, std::size_t cap) {
  return compile_network(model, cap).arena;
}

}  // namespace hypergames
