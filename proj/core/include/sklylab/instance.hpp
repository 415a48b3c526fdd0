#pragma once

// Named center presentations and their JSON form ("sklylab.instance/1").

#include <string>

#include <nlohmann/json.hpp>

#include "sklylab/singularity.hpp"

namespace sklylab {

inline constexpr const char* kInstanceSchema = "sklylab.instance/1";

/// rho1-shaped rational surrogate with s = 2.
CenterPresentation preset_even_rho1();
/// n = 3 synthetic odd instance, singular along t^3 e0 + t^2 (0, -1).
CenterPresentation preset_odd_n3();
/// Throws InvalidInstance for an unknown name.
CenterPresentation preset(const std::string& name);

nlohmann::json instance_to_json(const CenterPresentation& P);
/// Rebuilds through the validating builders. Throws InvalidInstance or the
/// builder's error.
CenterPresentation instance_from_json(const nlohmann::json& j);
CenterPresentation load_instance(const std::string& path);
void save_instance(const CenterPresentation& P, const std::string& path);

}  // namespace sklylab
