#include "jobshop/io.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

namespace jobshop {

namespace {

struct Token {
  long value = 0;
  int line = 0;
  int column = 0;
};

// Line/column-tracking integer lexer. '#' comments run to end of line;
// lines whose first non-blank character is alphabetic are decoration (the
// Taillard files label their matrices with "Times" / "Machines") and are
// skipped as a whole.
class IntLexer {
 public:
  explicit IntLexer(std::istream& in) {
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      auto hash = line.find('#');
      if (hash != std::string::npos) line.resize(hash);
      std::size_t i = 0;
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i < line.size() && std::isalpha(static_cast<unsigned char>(line[i]))) continue;
      while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
          ++i;
          continue;
        }
        std::size_t begin = i;
        if (line[i] == '+' || line[i] == '-') ++i;
        std::size_t digits_begin = i;
        while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
        if (i == digits_begin) {
          fail(ErrorKind::malformed_count,
               std::string("unexpected character '") + line[begin] + "'", line_no,
               static_cast<int>(begin) + 1);
        }
        Token token;
        token.value = std::stol(line.substr(begin, i - begin));
        token.line = line_no;
        token.column = static_cast<int>(begin) + 1;
        tokens_.push_back(token);
        if (lines_.empty() || lines_.back() != line_no) lines_.push_back(line_no);
      }
    }
  }

  bool done() const { return next_ >= tokens_.size(); }
  std::size_t remaining() const { return tokens_.size() - next_; }

  const Token& peek() const { return tokens_[next_]; }

  Token take(const char* what) {
    if (done()) {
      fail(ErrorKind::malformed_count, std::string("unexpected end of input, expected ") + what,
           last_line(), 0);
    }
    return tokens_[next_++];
  }

  int last_line() const { return tokens_.empty() ? 0 : tokens_.back().line; }

  // Token index ranges grouped by input line, for line-oriented grammars.
  std::vector<std::pair<int, std::vector<Token>>> rows() const {
    std::vector<std::pair<int, std::vector<Token>>> out;
    for (const Token& token : tokens_) {
      if (out.empty() || out.back().first != token.line) {
        out.push_back({token.line, {}});
      }
      out.back().second.push_back(token);
    }
    return out;
  }

 private:
  std::vector<Token> tokens_;
  std::vector<int> lines_;
  std::size_t next_ = 0;
};

int as_count(const Token& token, const char* what) {
  if (token.value < 0 || token.value > std::numeric_limits<int>::max()) {
    fail(ErrorKind::malformed_count,
         std::string("invalid ") + what + " " + std::to_string(token.value), token.line,
         token.column);
  }
  return static_cast<int>(token.value);
}

Instance parse_pairs(std::istream& in, bool strict_jsp) {
  IntLexer lexer(in);
  auto rows = lexer.rows();
  if (rows.empty()) fail(ErrorKind::malformed_count, "empty input, expected 'n m' header");

  const auto& header = rows[0].second;
  if (header.size() != 2) {
    fail(ErrorKind::malformed_count,
         "header must be 'n m', got " + std::to_string(header.size()) + " values",
         rows[0].first, header.front().column);
  }
  int n = as_count(header[0], "job count");
  int m = as_count(header[1], "machine count");
  if (n > 0 && m < 1) {
    fail(ErrorKind::malformed_count, "machine count must be >= 1 when jobs exist",
         rows[0].first, header[1].column);
  }

  if (static_cast<int>(rows.size()) - 1 != n) {
    fail(ErrorKind::malformed_count,
         "header claims " + std::to_string(n) + " jobs but body has " +
             std::to_string(rows.size() - 1) + " lines",
         rows.empty() ? 0 : rows.back().first, 0);
  }

  std::vector<std::vector<OpSpec>> chains(n);
  for (int job = 0; job < n; ++job) {
    const auto& row = rows[job + 1].second;
    if (static_cast<int>(row.size()) != 2 * m) {
      fail(ErrorKind::malformed_count,
           "job line must hold " + std::to_string(m) + " 'machine duration' pairs, got " +
               std::to_string(row.size()) + " values",
           rows[job + 1].first, row.front().column);
    }
    for (int pos = 0; pos < m; ++pos) {
      const Token& machine = row[2 * pos];
      const Token& duration = row[2 * pos + 1];
      if (machine.value < 0 || machine.value >= m) {
        fail(ErrorKind::machine_index_out_of_range,
             "machine " + std::to_string(machine.value) + " outside [0, " +
                 std::to_string(m) + ")",
             machine.line, machine.column);
      }
      if (duration.value < 1) {
        fail(ErrorKind::nonpositive_duration,
             "duration " + std::to_string(duration.value) + " must be >= 1", duration.line,
             duration.column);
      }
      chains[job].push_back(
          {static_cast<int>(machine.value), static_cast<Time>(duration.value)});
    }
  }

  Instance instance(m, chains);
  if (strict_jsp) require_strict_jsp(instance);
  return instance;
}

}  // namespace

Format parse_format(const std::string& text) {
  if (text == "standard") return Format::standard;
  if (text == "taillard") return Format::taillard;
  if (text == "demirkol") return Format::demirkol;
  fail(ErrorKind::bad_config, "unknown format '" + text + "'");
}

const char* to_string(Format format) {
  switch (format) {
    case Format::standard: return "standard";
    case Format::taillard: return "taillard";
    case Format::demirkol: return "demirkol";
  }
  return "?";
}

Instance parse_standard(std::istream& in, bool strict_jsp) {
  return parse_pairs(in, strict_jsp);
}

Instance parse_standard(const std::string& text, bool strict_jsp) {
  std::istringstream in(text);
  return parse_standard(in, strict_jsp);
}

Instance parse_taillard(std::istream& in, bool strict_jsp) {
  IntLexer lexer(in);
  auto rows = lexer.rows();
  if (rows.empty()) fail(ErrorKind::malformed_count, "empty input, expected Taillard header");

  // Header row: "n m" or the seeded "n m time_seed machine_seed ub lb".
  const auto& header = rows[0].second;
  if (header.size() != 2 && header.size() != 6) {
    fail(ErrorKind::malformed_count,
         "ambiguous Taillard header with " + std::to_string(header.size()) +
             " values (expected 2 or 6)",
         rows[0].first, header.front().column);
  }
  int n = as_count(header[0], "job count");
  int m = as_count(header[1], "machine count");

  std::vector<Token> body;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    body.insert(body.end(), rows[r].second.begin(), rows[r].second.end());
  }
  std::size_t expected = static_cast<std::size_t>(n) * m * 2;
  if (body.size() != expected) {
    fail(ErrorKind::dimension_mismatch,
         "expected " + std::to_string(expected) + " matrix values for " +
             std::to_string(n) + "x" + std::to_string(m) + ", got " +
             std::to_string(body.size()),
         body.empty() ? rows[0].first : body.back().line, 0);
  }

  std::vector<std::vector<OpSpec>> chains(n, std::vector<OpSpec>(m));
  std::size_t cursor = 0;
  for (int job = 0; job < n; ++job) {
    for (int pos = 0; pos < m; ++pos) {
      const Token& t = body[cursor++];
      if (t.value < 1) {
        fail(ErrorKind::nonpositive_duration,
             "processing time " + std::to_string(t.value) + " must be >= 1", t.line,
             t.column);
      }
      chains[job][pos].duration = static_cast<Time>(t.value);
    }
  }
  for (int job = 0; job < n; ++job) {
    for (int pos = 0; pos < m; ++pos) {
      const Token& t = body[cursor++];
      if (t.value < 1 || t.value > m) {
        fail(ErrorKind::machine_index_out_of_range,
             "machine id " + std::to_string(t.value) + " outside 1.." + std::to_string(m),
             t.line, t.column);
      }
      chains[job][pos].machine = static_cast<int>(t.value) - 1;
    }
  }

  Instance instance(m, chains);
  if (strict_jsp) require_strict_jsp(instance);
  return instance;
}

Instance parse_taillard(const std::string& text, bool strict_jsp) {
  std::istringstream in(text);
  return parse_taillard(in, strict_jsp);
}

Instance parse_demirkol(std::istream& in, bool strict_jsp) {
  return parse_pairs(in, strict_jsp);
}

Instance parse_demirkol(const std::string& text, bool strict_jsp) {
  std::istringstream in(text);
  return parse_demirkol(in, strict_jsp);
}

std::string serialize_standard(const Instance& instance) {
  std::ostringstream out;
  // Chains all have equal length in instances that round-trip through the
  // standard grammar; serialize what is there either way.
  int m = instance.machine_count();
  out << instance.job_count() << " " << m << "\n";
  for (int job = 0; job < instance.job_count(); ++job) {
    bool first = true;
    for (const Operation& op : instance.job_chain(job)) {
      if (!first) out << " ";
      out << op.machine << " " << op.duration;
      first = false;
    }
    out << "\n";
  }
  return out.str();
}

BestKnownTable load_best_known(std::istream& in) {
  BestKnownTable table;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream row(line);
    std::string name;
    if (!(row >> name)) continue;  // blank line
    long value = 0;
    if (!(row >> value)) {
      fail(ErrorKind::malformed_count, "expected 'name value'", line_no, 0);
    }
    std::string extra;
    if (row >> extra) {
      fail(ErrorKind::malformed_count, "trailing content '" + extra + "'", line_no, 0);
    }
    if (value < 1) {
      fail(ErrorKind::nonpositive_value,
           "best-known for '" + name + "' must be >= 1, got " + std::to_string(value),
           line_no, 0);
    }
    if (!table.values.emplace(name, static_cast<Time>(value)).second) {
      fail(ErrorKind::duplicate_name, "duplicate entry '" + name + "'", line_no, 0);
    }
  }
  return table;
}

BestKnownTable load_best_known(const std::string& text) {
  std::istringstream in(text);
  return load_best_known(in);
}

Schedule load_schedule(std::istream& in, const Instance& instance) {
  Schedule schedule(instance.op_count());
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream row(line);
    long job = 0, pos = 0, start = 0;
    if (!(row >> job)) continue;
    if (!(row >> pos >> start)) {
      fail(ErrorKind::malformed_count, "expected 'job pos start'", line_no, 0);
    }
    std::string extra;
    if (row >> extra) {
      fail(ErrorKind::malformed_count, "trailing content '" + extra + "'", line_no, 0);
    }
    if (!instance.contains(static_cast<int>(job), static_cast<int>(pos))) {
      fail(ErrorKind::unknown_operation,
           "no operation (job " + std::to_string(job) + ", pos " + std::to_string(pos) + ")",
           line_no, 0);
    }
    if (start < 0) {
      fail(ErrorKind::nonpositive_value, "start times must be >= 0", line_no, 0);
    }
    OpId id = instance.id(static_cast<int>(job), static_cast<int>(pos));
    if (schedule.has(id)) {
      fail(ErrorKind::duplicate_assignment,
           "operation (job " + std::to_string(job) + ", pos " + std::to_string(pos) +
               ") assigned twice",
           line_no, 0);
    }
    schedule.set(id, static_cast<Time>(start));
  }
  return schedule;
}

Schedule load_schedule(const std::string& text, const Instance& instance) {
  std::istringstream in(text);
  return load_schedule(in, instance);
}

Instance load_instance(const std::string& path, Format format) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::io_failure, "cannot open instance file '" + path + "'");
  switch (format) {
    case Format::standard: return parse_standard(in, false);
    case Format::taillard: return parse_taillard(in, true);
    case Format::demirkol: return parse_demirkol(in, true);
  }
  fail(ErrorKind::internal, "unhandled format");
}

BestKnownTable load_best_known_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::io_failure, "cannot open best-known file '" + path + "'");
  return load_best_known(in);
}

std::string instance_stem(const std::string& path) {
  auto slash = path.find_last_of("/\\");
  std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
  auto dot = name.find_last_of('.');
  if (dot != std::string::npos && dot > 0) name.resize(dot);
  return name;
}

}  // namespace jobshop
