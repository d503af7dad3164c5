#ifndef LSA_PGM_HPP
#define LSA_PGM_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace lsa {

// Grayscale raster with integer samples in [0, maxval], row-major.
struct PgmImage {
  int width = 0;
  int height = 0;
  int maxval = 255;
  std::vector<int> pixels;

  int at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * width + x]; }
};

// Reads P2 (ASCII) or P5 (binary, 8- or 16-bit big-endian) with # comments.
PgmImage read_pgm(std::istream& in);
PgmImage read_pgm_file(const std::string& path);

// Writes ASCII P2, lines wrapped below 70 characters.
void write_pgm(std::ostream& out, const PgmImage& img);
void write_pgm_file(const std::string& path, const PgmImage& img);

}

#endif
