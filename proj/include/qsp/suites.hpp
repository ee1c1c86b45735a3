#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qsp/schur.hpp"

namespace qsp {

struct HeckeLetter {
    enum Kind { T, Tinv, X, Xinv } kind;
    int index;
    std::string str() const;
};
using HeckeWord = std::vector<HeckeLetter>;  // read left to right, as a right action

struct HeckeRelation {
    std::string id, anchor;
    std::vector<std::pair<Scalar, HeckeWord>> terms;  // expected to vanish
};

// Toric, quadratic, braid and Bernstein relations of the presentation.
std::vector<HeckeRelation> hecke_relations(const HeckeParams& p);
// Relations satisfied by the composite generator T_d.
std::vector<HeckeRelation> braid_td_relations(const HeckeParams& p);

HeckeElt eval_relation(const Hecke& H, const HeckeRelation& rel);
TensorVec eval_relation(const HeckeAction& A, const HeckeRelation& rel, const TensorVec& v);

// All f in [-m n, m n]^d allowed by the variant.
std::vector<std::vector<int>> window_indices(const RepParams& p, int mult);

struct SuiteConfig {
    std::string suite;
    int r = 3, d = 2;
    Variant variant = Variant::jj;
    Specialization spec;
    int window = 2;
    int max_len = 6;
    int cert_len = 3;
    std::string cache_dir;  // empty: no cache
};

struct CheckRecord {
    std::string id, anchor;
    bool pass = false;
    std::string counterexample, detail;
    double seconds = 0;
};

struct SuiteReport {
    static constexpr int schema_version = 1;
    SuiteConfig config;
    std::vector<CheckRecord> checks;
    double seconds = 0;

    bool passed() const;
    std::size_t failures() const;
    nlohmann::json to_json() const;
    std::string to_markdown() const;
};

const std::vector<std::string>& suite_names();

// Throws std::invalid_argument for an unknown suite or a violated precondition.
SuiteReport run_suite(const SuiteConfig& c);

// Keyed JSON files with Bernstein elements and BFS tables.
class TableCache {
public:
    explicit TableCache(std::string dir) : dir_(std::move(dir)) {}
    // Load X_a into H when a cache file exists, otherwise write one. Returns true on a hit.
    bool prime(Hecke& H) const;
    std::vector<std::vector<WeylElt>> bfs(const WeylParams& p, int max_len) const;

private:
    std::string dir_;
};

}  // namespace qsp
