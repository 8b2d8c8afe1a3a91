/* Thin front end over libcantor's command runner: forward the arguments,
 * print the JSON document, surface the exit code. */

#include <stdio.h>

#include "cantor/cantor.h"

int main(int argc, char** argv) {
  char* out = NULL;
  char* diag = NULL;
  const int code =
      cantor_run(argc - 1, (const char* const*)(argv + 1), &out, &diag);
  if (out != NULL) {
    fputs(out, stdout);
    cantor_string_free(out);
  }
  if (diag != NULL) {
    fputs(diag, stderr);
    cantor_string_free(diag);
  }
  return code;
}
