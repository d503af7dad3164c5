#include "lsa/energy_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace lsa {

std::string format_real(double x)
{
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

double parse_real(const std::string& token)
{
  double x = 0.0;
  const char* first = token.data();
  const char* last = first + token.size();
  auto res = std::from_chars(first, last, x);
  if (res.ec != std::errc() || res.ptr != last)
    throw parse_error("bad real value '" + token + "'");
  return x;
}

namespace {

long parse_int(const std::string& token)
{
  long v = 0;
  const char* first = token.data();
  const char* last = first + token.size();
  auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc() || res.ptr != last)
    throw parse_error("bad integer value '" + token + "'");
  return v;
}

// Token stream over the input with '#' comments stripped.
class tokenizer {
public:
  explicit tokenizer(std::istream& in)
  {
    std::string line;
    while (std::getline(in, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos)
        line.erase(hash);
      std::istringstream ls(line);
      std::string tok;
      while (ls >> tok)
        tokens_.push_back(tok);
    }
  }

  std::string next(const char* what)
  {
    if (pos_ >= tokens_.size())
      throw parse_error(std::string("unexpected end of input, expected ") + what);
    return tokens_[pos_++];
  }

  bool done() const { return pos_ >= tokens_.size(); }

private:
  std::vector<std::string> tokens_;
  std::size_t pos_ = 0;
};

void expect(tokenizer& t, const char* keyword)
{
  std::string tok = t.next(keyword);
  if (tok != keyword)
    throw parse_error("expected '" + std::string(keyword) + "', got '" + tok + "'");
}

}

BinaryEnergy read_energy(std::istream& in)
{
  tokenizer t(in);
  expect(t, "BPBE");
  std::string version = t.next("format version");
  if (version != "1")
    throw parse_error("unsupported BPBE version '" + version + "'");

  expect(t, "vars");
  long n = parse_int(t.next("variable count"));
  if (n < 0)
    throw parse_error("negative variable count");

  expect(t, "constant");
  double constant = parse_real(t.next("constant"));

  EnergyBuilder builder(static_cast<int>(n));
  builder.add_constant(constant);

  expect(t, "unary");
  long k = parse_int(t.next("unary count"));
  for (long i = 0; i < k; ++i) {
    long p = parse_int(t.next("unary index"));
    double u = parse_real(t.next("unary value"));
    if (p < 0 || p >= n)
      throw parse_error("unary index " + std::to_string(p) + " out of range");
    builder.add_unary(static_cast<int>(p), u);
  }

  expect(t, "pairwise");
  long l = parse_int(t.next("pairwise count"));
  for (long i = 0; i < l; ++i) {
    long p = parse_int(t.next("pair index p"));
    long q = parse_int(t.next("pair index q"));
    double w = parse_real(t.next("pair weight"));
    if (p < 0 || p >= n || q < 0 || q >= n)
      throw parse_error("pair index out of range");
    builder.add_pair(static_cast<int>(p), static_cast<int>(q), w);
  }

  if (!t.done())
    throw parse_error("trailing tokens after pairwise section");

  return builder.build();
}

BinaryEnergy read_energy_file(const std::string& path)
{
  std::ifstream in(path);
  if (!in)
    throw io_error("cannot open energy file '" + path + "'");
  return read_energy(in);
}

void write_energy(std::ostream& out, const BinaryEnergy& e)
{
  out << "BPBE 1\n";
  out << "vars " << e.num_vars() << "\n";
  out << "constant " << format_real(e.constant()) << "\n";

  int k = 0;
  for (double u : e.unary())
    k += u != 0.0;
  out << "unary " << k << "\n";
  for (int p = 0; p < e.num_vars(); ++p)
    if (e.unary()[p] != 0.0)
      out << p << " " << format_real(e.unary()[p]) << "\n";

  out << "pairwise " << e.pairwise().size() << "\n";
  for (const PairTerm& t : e.pairwise())
    out << t.p << " " << t.q << " " << format_real(t.w) << "\n";
}

void write_energy_file(const std::string& path, const BinaryEnergy& e)
{
  std::ofstream out(path);
  if (!out)
    throw io_error("cannot open '" + path + "' for writing");
  write_energy(out, e);
  out.flush();
  if (!out)
    throw io_error("error writing '" + path + "'");
}

}
