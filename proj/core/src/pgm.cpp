#include "lsa/pgm.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "lsa/errors.hpp"

namespace lsa {

namespace {

// Skips whitespace and # comments, then reads one nonnegative decimal token.
int read_header_int(std::istream& in, const char* what)
{
  int c = in.get();
  while (c != std::istream::traits_type::eof()) {
    if (c == '#') {
      while (c != std::istream::traits_type::eof() && c != '\n')
        c = in.get();
    } else if (std::isspace(c)) {
      c = in.get();
    } else {
      break;
    }
  }
  if (c == std::istream::traits_type::eof() || !std::isdigit(c))
    throw parse_error(std::string("pgm: expected ") + what);
  long value = 0;
  while (c != std::istream::traits_type::eof() && std::isdigit(c)) {
    value = value * 10 + (c - '0');
    if (value > 1000000000)
      throw parse_error(std::string("pgm: ") + what + " out of range");
    c = in.get();
  }
  if (c != std::istream::traits_type::eof())
    in.unget();
  return static_cast<int>(value);
}

}

PgmImage read_pgm(std::istream& in)
{
  int c0 = in.get();
  int c1 = in.get();
  if (c0 != 'P' || (c1 != '2' && c1 != '5'))
    throw parse_error("pgm: magic must be P2 or P5");
  const bool binary = c1 == '5';

  PgmImage img;
  img.width = read_header_int(in, "width");
  img.height = read_header_int(in, "height");
  img.maxval = read_header_int(in, "maxval");
  if (img.width < 1 || img.height < 1)
    throw parse_error("pgm: dimensions must be positive");
  if (img.maxval < 1 || img.maxval > 65535)
    throw parse_error("pgm: maxval must be in [1, 65535]");

  const std::size_t count = static_cast<std::size_t>(img.width) * img.height;
  img.pixels.resize(count);
  if (binary) {
    const int c = in.get();
    if (c == std::istream::traits_type::eof() || !std::isspace(c))
      throw parse_error("pgm: missing raster separator");
    const int bytes = img.maxval > 255 ? 2 : 1;
    for (std::size_t i = 0; i < count; ++i) {
      int value = 0;
      for (int b = 0; b < bytes; ++b) {
        const int byte = in.get();
        if (byte == std::istream::traits_type::eof())
          throw parse_error("pgm: truncated raster");
        value = value * 256 + byte;
      }
      img.pixels[i] = value;
    }
  } else {
    for (std::size_t i = 0; i < count; ++i)
      img.pixels[i] = read_header_int(in, "pixel");
  }
  for (std::size_t i = 0; i < count; ++i)
    if (img.pixels[i] < 0 || img.pixels[i] > img.maxval)
      throw parse_error("pgm: pixel exceeds maxval");
  return img;
}

PgmImage read_pgm_file(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw io_error("cannot open image: " + path);
  return read_pgm(in);
}

void write_pgm(std::ostream& out, const PgmImage& img)
{
  if (img.width < 1 || img.height < 1
      || img.pixels.size() != static_cast<std::size_t>(img.width) * img.height)
    throw dimension_error("pgm: pixel count does not match dimensions");
  if (img.maxval < 1 || img.maxval > 65535)
    throw parameter_error("pgm: maxval must be in [1, 65535]");

  out << "P2\n" << img.width << ' ' << img.height << '\n' << img.maxval << '\n';
  std::string line;
  for (std::size_t i = 0; i < img.pixels.size(); ++i) {
    const std::string tok = std::to_string(img.pixels[i]);
    if (!line.empty() && line.size() + 1 + tok.size() > 69) {
      out << line << '\n';
      line.clear();
    }
    if (!line.empty())
      line += ' ';
    line += tok;
  }
  if (!line.empty())
    out << line << '\n';
}

void write_pgm_file(const std::string& path, const PgmImage& img)
{
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw io_error("cannot open image for writing: " + path);
  write_pgm(out, img);
  out.flush();
  if (!out)
    throw io_error("write failed: " + path);
}

}
