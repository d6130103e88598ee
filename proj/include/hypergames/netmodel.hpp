#ifndef HYPERGAMES_NETMODEL_HPP
#define HYPERGAMES_NETMODEL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "hypergames/arena.hpp"

namespace hypergames {

// Declarative network-security model: hosts running services, directed
// connectivity (optionally several switchable topologies), vulnerabilities
// with credential/service pre- and postconditions, decoy hosts, and the
// defender's countermeasure schema. Compiles into an arena whose true
// labeling marks decoy locations and whose attacker labeling does not.

struct Vulnerability {
  int id = 0;
  int service = 0;          // must run on the target
  int pre_credential = 1;   // needed on the attacker's current host
  int post_credential = 1;  // gained on the target host
  bool stops_service = false;
};

struct Host {
  int id = 0;
  std::vector<int> services;
  std::vector<int> noncritical;  // subset of services the defender may suspend
  bool is_decoy = false;
};

struct NetworkModel {
  std::vector<Host> hosts;  // sorted by id
  std::vector<std::string> topology_names;
  std::vector<std::vector<std::pair<int, int>>> topologies;  // edges as host ids
  std::vector<Vulnerability> vulns;
  std::vector<int> decoys;  // host ids
  int attacker_start = 0;
  int attacker_credential = 1;
  bool defender_suspend = false;
  bool defender_restore = false;
  bool defender_topology = false;
  std::string objective_defender;
  std::string objective_attacker;

  int host_index(int id) const;  // -1 when unknown
};

// Service status: the defender's suspension is reversible; a stop caused by a
// vulnerability postcondition is not, and may hit critical services too.
enum class ServiceStatus : uint8_t { running = 0, suspended = 1, stopped = 2 };

struct NetworkState {
  Player turn = Player::P2;
  int location = 0;  // host index
  int topology = 0;
  std::vector<uint8_t> cred;                // per host index, 0..2
  std::vector<uint8_t> svc;                 // flattened (host, service slot) status
  bool operator==(const NetworkState&) const = default;
};

// Schema-checked load; violations name the offending path.
NetworkModel load_network(const nlohmann::json& doc);
NetworkModel load_network_file(const std::string& path);

NetworkState initial_state(const NetworkModel& model);

// service status access (host index, service id)
ServiceStatus service_status(const NetworkModel& model, const NetworkState& state, int host_idx,
                             int service);

// True iff the attacker sits on `source`, `target` is connected from it under
// the state's topology, the source credential meets the threshold, and the
// vulnerable service is running (not suspended, not stopped) on the target.
// Hosts are named by id.
bool vuln_applicable(const NetworkModel& model, const NetworkState& state,
                     const Vulnerability& vuln, int source_id, int target_id);

// Moves the attacker onto the target, raises the target credential to the
// vulnerability's grant, applies the service stop when the vulnerability has
// one, and passes the turn. Raises model_error when not applicable.
NetworkState apply_vuln(const NetworkModel& model, const NetworkState& state,
                        const Vulnerability& vuln, int target_id);

// Reachable arena of the interaction. Attacker states offer one exploit per
// applicable (vulnerability, target) plus skip; defender states offer
// suspend/restore per noncritical service, topology switches, and noop.
// Labels: both perspectives see p<i> once host i's credential is at least
// user level; only the true perspective sees `decoy` at decoy locations.
struct CompiledNetwork {
  Arena arena;
  std::vector<int> site;        // per arena state: host id of the attacker location
  std::vector<int> decoy_sites; // host ids
};

CompiledNetwork compile_network(const NetworkModel& model, std::size_t cap = 2000000);
Arena compile_arena(const NetworkModel& model, std::size_t cap = 2000000);

}  // namespace hypergames

#endif
