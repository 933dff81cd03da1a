// Copyright 2026 The codezeta Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "codezeta/codezeta.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <string>

#include "codezeta/error.hpp"
#include "codezeta/parallel.hpp"
#include "report.hpp"

struct cz_code {
  codezeta::LinearCode code;
};

namespace {

thread_local std::string last_error;

cz_status status_for(codezeta::ErrorKind kind) {
  using codezeta::ErrorKind;
  switch (kind) {
    case ErrorKind::parse: return CZ_ERR_PARSE;
    case ErrorKind::validation: return CZ_ERR_VALIDATION;
    case ErrorKind::capacity: return CZ_ERR_CAPACITY;
    case ErrorKind::unsupported_field: return CZ_ERR_UNSUPPORTED_FIELD;
    case ErrorKind::domain: return CZ_ERR_DOMAIN;
    case ErrorKind::division_by_zero:
    case ErrorKind::invalid_distribution:
    case ErrorKind::check_failed:
    case ErrorKind::numerical: return CZ_CHECK_FAILED;
  }
  return CZ_ERR_INTERNAL;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class Fn>
cz_status guarded(Fn&& fn) {
  last_error.clear();
  try {
    return fn();
  } catch (const codezeta::Error& e) {
    last_error = std::string(codezeta::to_string(e.kind())) + ": " + e.what();
    return status_for(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return CZ_ERR_CAPACITY;
  } catch (const std::exception& e) {
    last_error = e.what();
    return CZ_ERR_INTERNAL;
  }
}

template <class Build>
cz_status emit(char** json_out, Build&& build) {
  if (json_out == nullptr) {
    last_error = "json_out is NULL";
    return CZ_ERR_USAGE;
  }
  *json_out = nullptr;
  return guarded([&] {
    const codezeta::report::Json doc = build();
    *json_out = copy_string(doc.dump(2));
    return doc.at("passed").get<bool>() ? CZ_OK : CZ_CHECK_FAILED;
  });
}

template <class Build>
cz_status emit_for(const cz_code* code, char** json_out, Build&& build) {
  if (code == nullptr) {
    last_error = "code is NULL";
    if (json_out != nullptr) *json_out = nullptr;
    return CZ_ERR_USAGE;
  }
  return emit(json_out, [&] { return build(code->code); });
}

}  // namespace

extern "C" {

const char* cz_version(void) { return "0.1.0"; }

const char* cz_last_error(void) { return last_error.c_str(); }

int cz_exit_code(cz_status status) {
  if (status == CZ_OK) return 0;
  if (status == CZ_CHECK_FAILED) return 1;
  return 2;
}

void cz_set_worker_count(unsigned count) { codezeta::set_worker_count(count); }

cz_status cz_code_parse(const char* text, cz_code** out) {
  if (text == nullptr || out == nullptr) {
    last_error = "NULL argument";
    return CZ_ERR_USAGE;
  }
  *out = nullptr;
  return guarded([&] {
    *out = new cz_code{codezeta::parse_code(text)};
    return CZ_OK;
  });
}

cz_status cz_code_load(const char* path, cz_code** out) {
  if (path == nullptr || out == nullptr) {
    last_error = "NULL argument";
    return CZ_ERR_USAGE;
  }
  *out = nullptr;
  std::ifstream in(path);
  if (!in) {
    last_error = std::string("cannot open ") + path;
    return CZ_ERR_IO;
  }
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return cz_code_parse(text.c_str(), out);
}

void cz_code_free(cz_code* code) { delete code; }

int cz_code_q(const cz_code* code) { return code ? code->code.q() : 0; }
int cz_code_length(const cz_code* code) { return code ? code->code.length() : 0; }
int cz_code_dimension(const cz_code* code) { return code ? code->code.dimension() : 0; }

cz_status cz_report_weights(const cz_code* code, char** json_out) {
  return emit_for(code, json_out, codezeta::report::weights);
}
cz_status cz_report_zeta(const cz_code* code, char** json_out) {
  return emit_for(code, json_out, codezeta::report::zeta);
}
cz_status cz_report_rankgen(const cz_code* code, char** json_out) {
  return emit_for(code, json_out, codezeta::report::rankgen);
}
cz_status cz_report_greene(const cz_code* code, char** json_out) {
  return emit_for(code, json_out, codezeta::report::greene);
}
cz_status cz_report_twovar(const cz_code* code, char** json_out) {
  return emit_for(code, json_out, codezeta::report::twovar);
}
cz_status cz_report_bounds(const cz_code* code, char** json_out) {
  return emit_for(code, json_out, codezeta::report::bounds);
}
cz_status cz_report_clifford(const cz_code* code, int exhaustive, uint64_t samples, uint64_t seed, char** json_out) {
  return emit_for(code, json_out, [&](const codezeta::LinearCode& c) {
    return codezeta::report::clifford(c, exhaustive != 0, samples, seed);
  });
}
cz_status cz_report_full(const cz_code* code, char** json_out) {
  return emit_for(code, json_out, codezeta::report::full);
}
cz_status cz_report_extremal(int q, int c, int n, int ultraspherical, char** json_out) {
  return emit(json_out, [&] { return codezeta::report::extremal(q, c, n, ultraspherical != 0); });
}

void cz_string_free(char* s) { std::free(s); }

}  // extern "C"
