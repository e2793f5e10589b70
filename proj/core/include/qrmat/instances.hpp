#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qrmat/json_io.hpp"
#include "qrmat/superdata.hpp"

namespace qrmat {

/// Parsed description of one instance, as accepted by the CLI and batch
/// files.
struct InstanceSpec {
    Family family = Family::Osp;
    int m = 0, n = 0;
    std::string parity;             // e.g. "101"
    std::string theta;              // e.g. "+-+", empty for the default
    std::optional<Rational> eval_q; // optional specialization of q

    SuperData build() const;
    std::string label() const;

    static InstanceSpec from_json(const Json& j);
    Json to_json() const;
};

/// The default verification matrix: all admissible parity sequences of the
/// standard size list for both families.
std::vector<InstanceSpec> default_instances();

std::vector<InstanceSpec> load_batch(const std::string& path);
void write_default_batch(const std::string& path);

}  // namespace qrmat
