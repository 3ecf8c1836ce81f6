#include "dadelab/module_io.hpp"

#include <fstream>
#include <sstream>

namespace dadelab {

namespace {

struct LineReader {
  std::istream& is;
  std::size_t number = 0;

  std::string next(const char* what) {
    std::string line;
    while (std::getline(is, line)) {
      ++number;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.find_first_not_of(" \t") != std::string::npos) return line;
    }
    throw ParseError("line " + std::to_string(number + 1) + ": unexpected end of file, expected " + what);
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("line " + std::to_string(number) + ": " + msg);
  }
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

void write_module(const RPModule& M, std::ostream& os) {
  const Ring& R = *M.ring();
  os << R.header() << "\n";
  os << "G " << M.group()->name() << "\n";
  os << "dim " << M.dim() << "\n";
  for (const auto& A : M.action()) {
    os << "gen\n";
    for (std::size_t i = 0; i < A.rows(); ++i) {
      for (std::size_t j = 0; j < A.cols(); ++j) {
        if (j) os << ";";
        os << R.to_string(A(i, j));
      }
      os << "\n";
    }
  }
}

void write_module(const RPModule& M, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw InvalidArgument("cannot open " + path + " for writing");
  write_module(M, os);
}

RPModule read_module(std::istream& is) {
  LineReader in{is};
  RingPtr R;
  {
    const std::string line = in.next("ring header");
    try {
      R = Ring::parse_header(trim(line));
    } catch (const Error& e) {
      in.fail(e.what());
    }
  }
  GroupPtr P;
  {
    const std::string line = trim(in.next("group line"));
    if (line.rfind("G ", 0) != 0) in.fail("expected 'G <spec>'");
    try {
      P = catalog::build_group(trim(line.substr(2)));
    } catch (const Error& e) {
      in.fail(e.what());
    }
  }
  if (P->p() != R->p()) in.fail("group and ring have different primes");
  std::size_t dim = 0;
  {
    const std::string line = trim(in.next("dim line"));
    std::istringstream ls(line);
    std::string word;
    long long d = -1;
    if (!(ls >> word >> d) || word != "dim" || d < 0 || !(ls >> std::ws).eof()) in.fail("expected 'dim <d>'");
    dim = static_cast<std::size_t>(d);
  }
  std::vector<Matrix> action;
  for (std::size_t g = 0; g < P->generators().size(); ++g) {
    if (trim(in.next("'gen'")) != "gen") in.fail("expected 'gen'");
    Matrix A(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
      const std::string line = in.next("matrix row");
      std::istringstream ls(line);
      std::string cell;
      std::size_t j = 0;
      while (std::getline(ls, cell, ';')) {
        if (j >= dim) in.fail("row has more than " + std::to_string(dim) + " entries");
        try {
          A(i, j++) = R->parse_element(trim(cell));
        } catch (const ParseError& e) {
          in.fail(e.what());
        }
      }
      if (j != dim) in.fail("row has " + std::to_string(j) + " entries, expected " + std::to_string(dim));
    }
    action.push_back(std::move(A));
  }
  std::string rest;
  while (std::getline(is, rest)) {
    ++in.number;
    if (!trim(rest).empty()) in.fail("trailing content");
  }
  return RPModule(R, P, dim, std::move(action));
}

RPModule read_module(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw InvalidArgument("cannot open " + path);
  return read_module(is);
}

}  // namespace dadelab
