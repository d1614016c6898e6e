#pragma once

#include "bsynth/boolean_net.hpp"
#include "bsynth/hitting_set.hpp"
#include "bsynth/region.hpp"
#include "bsynth/transition_system.hpp"

#include <filesystem>
#include <string>
#include <string_view>

// Line-oriented text formats. `#` starts a comment, blank lines are ignored
// and every directive starts with a dot. Identifiers match [A-Za-z0-9_.+-]+.
// Parse errors carry "<source>:<line>: " prefixes.
namespace bsynth::io {

bool is_identifier(std::string_view text);

TransitionSystem parse_ts(std::string_view text, std::string_view source = "<ts>");
BooleanNet parse_net(std::string_view text, std::string_view source = "<net>");
ImplicitRegion parse_region(std::string_view text, std::string_view source = "<region>");
HittingSetInstance parse_hs(std::string_view text, std::string_view source = "<hs>");

std::string write_ts(const TransitionSystem& ts);
std::string write_net(const BooleanNet& net);
std::string write_region(const ImplicitRegion& r);
std::string write_hs(const HittingSetInstance& instance);

// Whole-file helpers; both throw Error(Argument) on I/O failure.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace bsynth::io
