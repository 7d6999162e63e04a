// Copyright 2026 the qfc developers.
// SPDX-License-Identifier: Apache-2.0
//
// qfc: command-line front end. Placeholder while the library lands.
#include <cstdio>

int main() {
  std::puts("qfc: not yet wired up");
  return 64;
}
