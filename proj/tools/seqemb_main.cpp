#include <string>
#include <vector>

#include "seqemb/cli.hpp"

int main(int argc, char** argv) {
  return seqemb::cli::dispatch(std::vector<std::string>(argv, argv + argc));
}
