#include <cstdio>

#include "concordia/concordia.h"

int main(int argc, char** argv) {
  char* out = nullptr;
  int code = 0;
  if (cc_run_command(argc - 1, argv + 1, &out, &code) != CC_OK) {
    std::fprintf(stderr, "concordia: %s\n", cc_last_error());
    return 1;
  }
  std::fputs(out, stdout);
  cc_string_free(out);
  return code;
}
