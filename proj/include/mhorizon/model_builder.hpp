#pragma once

#include <map>
#include <string>
#include <vector>

#include "mhorizon/case_data.hpp"
#include "mhorizon/sparse_lp.hpp"

namespace mhorizon {

enum class VarKind {
    Invest,
    Capacity,
    Operation,
    Flow,
    LossOfLoad,
    StorageCharge,
    StorageDischarge,
    StorageLevel,
    Supply,
    Injection,
};

struct VarInfo {
    VarKind kind = VarKind::Operation;
    std::string entity; // asset/arc/supply id; node for loss-of-load and injection
    std::string node;
    int direction = 0; // arcs only: 0 = from->to, 1 = to->from
    int period = -1;   // 0-based; -1 when not indexed
    int scenario = -1;
    int season = -1;
    int hour = -1; // 1-based within season
};

// Bijective map between model variables and LP columns, with contiguous
// column indices in registration order.
class VariableRegistry {
public:
    int add(const VarInfo& info);
    int column(VarKind kind, const std::string& entity, int period, int scenario = -1,
               int season = -1, int hour = -1, int direction = 0) const;
    bool has(VarKind kind, const std::string& entity, int period, int scenario = -1,
             int season = -1, int hour = -1, int direction = 0) const;
    const VarInfo& info(int col) const { return infos_[col]; }
    int size() const { return static_cast<int>(infos_.size()); }
    long count(VarKind kind) const;

private:
    using Key = std::tuple<int, std::string, int, int, int, int, int>;
    static Key key(VarKind kind, const std::string& entity, int period, int scenario, int season,
                   int hour, int direction);
    std::vector<VarInfo> infos_;
    std::map<Key, int> index_;
};

// Structured row names: <tag>.<entity>.<qualifier>[.p<i>][.w<w>][.s<s>][.h<h>]
struct RowName {
    std::string tag;
    std::string entity;
    std::string qualifier; // node, direction, or "all"
    int period = -1;       // 1-based as printed
    int scenario = -1;
    int season = -1;
    int hour = -1;

    friend bool operator==(const RowName&, const RowName&) = default;
};

std::string format_row_name(const RowName& n);
RowName parse_row_name(const std::string& name); // lossless inverse

struct ModelArtifacts {
    lp::SparseLP lp;
    VariableRegistry registry;
    std::map<std::string, long> row_families; // tag -> row count
};

// Text report mapping row-name tags to the constraint family they implement.
std::string constraint_audit(const ModelArtifacts& artifacts);

// Assembles the deterministic-equivalent LP for a case. The add_* stages are
// exposed so each constraint family can be built and inspected in isolation;
// rows are merged into name order at finalize so assembly order never shows
// in the output.
class ModelBuilder {
public:
    explicit ModelBuilder(const CaseData& c);

    void register_variables();
    void add_investment_limits();
    void add_lifetime_coupling();
    void add_operation_bounds();
    void add_flow_balances();
    void add_storage_dynamics();
    void add_cumulative_limits();
    void add_emission_cap();
    void add_industry_demand();
    void build_objective();

    ModelArtifacts finalize();
    ModelArtifacts build_all();

    const lp::SparseLP& lp() const { return lp_; }
    const VariableRegistry& registry() const { return reg_; }

private:
    const CaseData& c_;
    lp::SparseLP lp_;
    VariableRegistry reg_;
    int periods_ = 0;
    int scenarios_ = 0;
    bool registered_ = false;

    template <typename Fn> void for_each_slot(Fn&& fn) const; // (i, w, s, h)
    double avail(const AssetSpec& a, int w, int s, int h) const;
    double out_scale(const AssetSpec& a, int w, int s, int h) const;
    int add_row(const RowName& name, lp::Sense sense, double rhs);
    std::vector<const AssetSpec*> routes_for(const std::string& sector,
                                             const std::string& node) const;
};

ModelArtifacts build_model(const CaseData& c);

} // namespace mhorizon
