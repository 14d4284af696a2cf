#include "esc/dimacs.hpp"

#include <istream>
#include <sstream>

#include "esc/error.hpp"

namespace esc {

void DimacsParser::feed(std::string_view bytes) {
  for (char ch : bytes) {
    switch (state_) {
    case State::line_start:
      if (ch == 'c') {
        state_ = State::comment;
        line_.clear();
        break;
      }
      if (ch == 'p') {
        if (have_header_)
          throw parse_error("line " + std::to_string(line_no_) + ": second header");
        state_ = State::header;
        line_.assign(1, ch);
        break;
      }
      state_ = State::clauses;
      [[fallthrough]];
    case State::clauses:
      if (ch >= '0' && ch <= '9') {
        if (!have_header_)
          throw parse_error("clause before the \"p cnf\" header");
        if (!in_number_) {
          in_number_ = true;
          number_ = 0;
        }
        number_ = number_ * 10 + (ch - '0');
        if (number_ > 0x7fffffff)
          throw parse_error("line " + std::to_string(line_no_) + ": literal out of range");
      } else if (ch == '-') {
        if (in_number_ || negative_)
          throw parse_error("line " + std::to_string(line_no_) + ": misplaced '-'");
        negative_ = true;
      } else if (ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n') {
        flush_number();
        if (ch == '\n')
          end_line();
      } else {
        throw parse_error("line " + std::to_string(line_no_) + ": unexpected character");
      }
      break;
    case State::comment:
    case State::header:
      if (ch == '\n')
        end_line();
      else
        line_ += ch;
      break;
    }
  }
}

void DimacsParser::flush_number() {
  if (!in_number_) {
    if (negative_)
      throw parse_error("line " + std::to_string(line_no_) + ": dangling '-'");
    return;
  }
  const auto v = static_cast<std::int32_t>(negative_ ? -number_ : number_);
  in_number_ = false;
  negative_ = false;
  if (v == 0) {
    handler_.clause(clause_);
    clause_.clear();
  } else {
    clause_.push_back(Lit::from_dimacs(v));
  }
}

void DimacsParser::end_line() {
  if (state_ == State::comment) {
    std::string_view body(line_);
    if (!body.empty() && body.back() == '\r')
      body.remove_suffix(1);
    if (!body.empty() && body.front() == ' ')
      body.remove_prefix(1);
    handler_.comment(body);
  } else if (state_ == State::header) {
    std::istringstream in(line_);
    std::string p, cnf, extra;
    std::uint64_t vars = 0, clauses = 0;
    if (!(in >> p >> cnf >> vars >> clauses) || p != "p" || cnf != "cnf" || (in >> extra))
      throw parse_error("line " + std::to_string(line_no_) + ": malformed header");
    have_header_ = true;
    handler_.header(vars, clauses);
  }
  state_ = State::line_start;
  ++line_no_;
}

void DimacsParser::finish() {
  if (state_ == State::comment || state_ == State::header)
    end_line();
  flush_number();
  if (!clause_.empty())
    throw parse_error("stream ends inside an unterminated clause");
  if (!have_header_)
    throw parse_error("missing \"p cnf\" header");
}

void DimacsStatsHandler::clause(std::span<const Lit> lits) {
  ++stats.clauses;
  stats.literals += lits.size();
  for (Lit l : lits)
    if (l.var() > stats.max_var)
      stats.max_var = l.var();
}

void parse_dimacs(std::istream &in, DimacsHandler &handler) {
  DimacsParser parser(handler);
  std::string buf(1 << 20, '\0');
  while (in) {
    in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
    parser.feed({buf.data(), static_cast<std::size_t>(in.gcount())});
  }
  parser.finish();
}

DimacsStats dimacs_stats(std::istream &in) {
  DimacsStatsHandler h;
  parse_dimacs(in, h);
  return std::move(h.stats);
}

} // namespace esc
