#include <cstdio>
#include <string>
#include <vector>

#include <colorice/cli_driver.hpp>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    colorice::RunResult res = colorice::run_cli(args);
    std::fputs(res.out.c_str(), stdout);
    return res.exit_code;
}
