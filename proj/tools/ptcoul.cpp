// Copyright 2026 The ptcoul Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "ptcoul/cli.hpp"

int main(int argc, char** argv) { return ptcoul::cli::run(argc, argv, std::cout, std::cerr); }
