// Regenerates the bundled fixture: make-fixture <out.png> [width height]
#include <cstdlib>
#include <iostream>

#include "lowpoly/codec.hpp"
#include "scene.hpp"

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: make-fixture <out.png> [width height]\n";
    return 2;
  }
  const int w = argc > 3 ? std::atoi(argv[2]) : 640;
  const int h = argc > 3 ? std::atoi(argv[3]) : 480;
  lowpoly::write_file(argv[1], lowpoly::encode_png(lowpoly::testing::make_pond_scene(w, h)));
  return 0;
}
