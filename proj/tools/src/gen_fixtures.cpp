// Regenerates the fixture codes under core/data/. The constructions are
// fully seeded, so rerunning always reproduces the committed files.
#include <cstdio>
#include <filesystem>

#include "recon/alist.hpp"
#include "recon/peg.hpp"

int main(int argc, char** argv) {
    const std::filesystem::path dir = argc > 1 ? argv[1] : "core/data";
    std::filesystem::create_directories(dir);

    const auto dump = [&](const char* name, const recon::ParityCheckMatrix& h) {
        const auto path = dir / name;
        recon::save_alist(h, path);
        std::printf("%s: n=%d r=%d\n", path.c_str(), h.n_cols, h.n_rows());
    };
    dump("hamming_7_4.alist", recon::hamming74());
    dump("peg_rate05_n4096.alist", recon::fixture_rate_half_4096());
    dump("peg_rate01_n10000.alist", recon::fixture_rate_tenth_10000());
    return 0;
}
