#include <iostream>

#include "dyck/acceptance.hpp"

int main() {
  bool ok = true;
  for (const auto& r : dyck::acceptance::run_all()) {
    std::cout << dyck::acceptance::format(r) << '\n';
    ok = ok && r.pass;
  }
  return ok ? 0 : 1;
}
