#pragma once

// JSON form of a PageReport:
//
//   {"engine_version": "...", "n": 5, "parity": "odd",
//    "cells": [{"p", "k", "q", "total_degree", "dim", "exact"}, ...],
//    "betti": [{"degree", "dim", "exact"}, ...]}

#include <string>

#include <json.hpp>

#include "knotcalc/spectral.hpp"

namespace knotcalc {

nlohmann::json to_json(const PageReport& report);
PageReport report_from_json(const nlohmann::json& j);

std::string emit_report(const PageReport& report);
// Throws InputError on malformed documents.
PageReport parse_report(const std::string& text);

Parity parse_parity(const std::string& text);

}  // namespace knotcalc
