#pragma once

#include <json.hpp>

#include <string>

// Human-readable rendering of a report envelope.
std::string render_text(const nlohmann::json& report);
