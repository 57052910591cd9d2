#ifndef JOBSHOP_IO_HPP
#define JOBSHOP_IO_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "jobshop/instance.hpp"
#include "jobshop/schedule.hpp"

namespace jobshop {

enum class Format { standard, taillard, demirkol };

Format parse_format(const std::string& text);
const char* to_string(Format format);

// Best-known makespans keyed by instance name.
struct BestKnownTable {
  std::map<std::string, Time> values;

  std::optional<Time> find(const std::string& name) const {
    auto it = values.find(name);
    if (it == values.end()) return std::nullopt;
    return it->second;
  }
};

// Standard format: "n m" header, then n lines with m "machine duration"
// pairs, machines 0-based. '#' starts a comment, blank lines are skipped,
// '\n' and '\r\n' both accepted. strict_jsp additionally requires each job
// to visit each machine exactly once.
Instance parse_standard(std::istream& in, bool strict_jsp = false);
Instance parse_standard(const std::string& text, bool strict_jsp = false);

// Taillard layout: header with n and m (a seeded 6-number header is
// accepted), an n x m processing-times matrix, then an n x m machine matrix
// with 1-based ids. Decoration lines such as "Times"/"Machines" are skipped.
Instance parse_taillard(std::istream& in, bool strict_jsp = true);
Instance parse_taillard(const std::string& text, bool strict_jsp = true);

// Demirkol distributions use the standard grammar with tolerant whitespace.
Instance parse_demirkol(std::istream& in, bool strict_jsp = true);
Instance parse_demirkol(const std::string& text, bool strict_jsp = true);

// Canonical serialization; parse_standard(serialize_standard(x)) == x.
std::string serialize_standard(const Instance& instance);

// "name value" per line, '#' comments. Duplicate names and values < 1 are
// rejected.
BestKnownTable load_best_known(std::istream& in);
BestKnownTable load_best_known(const std::string& text);

// Schedule file: "job pos start" per line (0-based), '#' comments.
Schedule load_schedule(std::istream& in, const Instance& instance);
Schedule load_schedule(const std::string& text, const Instance& instance);

// File helpers used by the CLI and the harness; throw io_failure on missing
// or unreadable paths. Strict-JSP validation defaults on for ta/dmu files.
Instance load_instance(const std::string& path, Format format);
BestKnownTable load_best_known_file(const std::string& path);

// "path/to/ta51.txt" -> "ta51"; the key used for best-known lookups.
std::string instance_stem(const std::string& path);

}  // namespace jobshop

#endif
