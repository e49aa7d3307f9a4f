#include "zetacomb/cli.hpp"

int main(int argc, char** argv) {
    return zetacomb::dispatch(std::vector<std::string>(argv + 1, argv + argc));
}
