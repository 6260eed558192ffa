// Standalone acceptance battery: one line per criterion, exit 0 only when
// every criterion matches its analyzed verdict (including the documented
// deformation failure, which must FAIL in exactly the recorded way).

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#include <colorice/acceptance.hpp>

int main(int argc, char** argv) {
    using namespace colorice;
    Config cfg;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--config") == 0 && i + 1 < argc) {
            try {
                cfg = load_config(argv[++i]);
            } catch (const ConfigError& e) {
                std::fprintf(stderr, "config error: %s\n", e.what());
                return 2;
            }
        } else {
            std::fprintf(stderr, "usage: %s [--config FILE]\n", argv[0]);
            return 2;
        }
    }

    const auto start = std::chrono::steady_clock::now();
    auto results = run_acceptance(cfg);
    const auto stop = std::chrono::steady_clock::now();
    const double secs =
        std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count() / 1000.0;

    std::fputs(acceptance_text(results).c_str(), stdout);
    std::printf("elapsed: %.1f s\n", secs);
    return acceptance_ok(results) ? 0 : 1;
}
