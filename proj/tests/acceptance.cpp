// Acceptance suite: runs every reproduction check exactly as the CLI
// `verify-paper` command does, prints one pass/fail line per item, and
// exits nonzero if anything fails. All comparisons are exact.

#include <iostream>

#include <symres/verify.hpp>

int main() {
    return symres::print_verification(std::cout);
}
