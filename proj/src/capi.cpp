// Copyright 2026 The cacheck Authors.
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

#include "cac/cac.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "cac/error.hpp"
#include "cac/report.hpp"
#include "cac/session.hpp"

struct cac_session {
  cac::Session session;
  std::string last_error;
};

namespace {

cac_status status_of(cac::ErrorKind k) {
  using cac::ErrorKind;
  switch (k) {
    case ErrorKind::Parse: return CAC_ERR_PARSE;
    case ErrorKind::FuelExhausted: return CAC_ERR_FUEL;
    case ErrorKind::InvalidArgument: return CAC_ERR_INVALID_ARGUMENT;
    default: return CAC_ERR_TYPE;
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

// Runs f, mapping exceptions to status codes and recording the message.
template <class F>
cac_status guarded(cac_session* s, F&& f) {
  if (!s) return CAC_ERR_INVALID_ARGUMENT;
  try {
    s->last_error.clear();
    return f();
  } catch (const cac::Error& e) {
    s->last_error = e.what();
    std::string msg = e.what();
    if (e.kind() == cac::ErrorKind::InvalidArgument && msg.rfind("io: ", 0) == 0) return CAC_ERR_IO;
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    s->last_error = "out of memory";
    return CAC_ERR_INTERNAL;
  } catch (const std::exception& e) {
    s->last_error = e.what();
    return CAC_ERR_INTERNAL;
  } catch (...) {
    s->last_error = "unknown failure";
    return CAC_ERR_INTERNAL;
  }
}

}  // namespace

extern "C" {

const char* cac_version(void) { return "0.1.0"; }

const char* cac_status_string(cac_status status) {
  switch (status) {
    case CAC_OK: return "ok";
    case CAC_ERR_PARSE: return "parse error";
    case CAC_ERR_TYPE: return "type error";
    case CAC_ERR_FUEL: return "fuel exhausted";
    case CAC_ERR_INVALID_ARGUMENT: return "invalid argument";
    case CAC_ERR_IO: return "i/o error";
    case CAC_CHECK_FAILED: return "check failed";
    case CAC_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

cac_session* cac_session_create(void) { return new (std::nothrow) cac_session(); }

void cac_session_destroy(cac_session* session) { delete session; }

cac_status cac_session_set_fuel(cac_session* session, size_t fuel) {
  return guarded(session, [&] {
    if (fuel == 0) throw cac::Error(cac::ErrorKind::InvalidArgument, "fuel must be positive");
    session->session.set_fuel(fuel);
    return CAC_OK;
  });
}

cac_status cac_load_file(cac_session* session, const char* path) {
  return guarded(session, [&] {
    if (!path) throw cac::Error(cac::ErrorKind::InvalidArgument, "path is NULL");
    session->session.load_file(path);
    return CAC_OK;
  });
}

cac_status cac_load_source(cac_session* session, const char* source, const char* name) {
  return guarded(session, [&] {
    if (!source) throw cac::Error(cac::ErrorKind::InvalidArgument, "source is NULL");
    session->session.load_source(source, name ? name : "<input>");
    return CAC_OK;
  });
}

cac_status cac_check(cac_session* session, cac_report_format format, char** report) {
  return guarded(session, [&] {
    auto results = session->session.run_directives();
    if (report)
      *report = dup(format == CAC_REPORT_STRUCTURED
                        ? cac::directives_json(session->session, results)
                        : cac::directives_text(session->session, results));
    for (const auto& r : results) {
      if (!r.ok) {
        session->last_error = r.error;
        return CAC_CHECK_FAILED;
      }
    }
    return CAC_OK;
  });
}

cac_status cac_normalize(cac_session* session, const char* term, char** normal_form) {
  return guarded(session, [&] {
    if (!term || !normal_form) throw cac::Error(cac::ErrorKind::InvalidArgument, "NULL argument");
    *normal_form = dup(cac::to_string(session->session.normalize(term)));
    return CAC_OK;
  });
}

cac_status cac_convert(cac_session* session, const char* lhs, const char* rhs, int* convertible) {
  return guarded(session, [&] {
    if (!lhs || !rhs || !convertible)
      throw cac::Error(cac::ErrorKind::InvalidArgument, "NULL argument");
    *convertible = session->session.convert(lhs, rhs) ? 1 : 0;
    return CAC_OK;
  });
}

cac_status cac_admissibility(cac_session* session, cac_report_format format, int strict,
                             cac_verdict* verdict, char** report) {
  return guarded(session, [&] {
    cac::AdmissibilityReport rep = session->session.admissibility(strict != 0);
    if (report)
      *report = dup(format == CAC_REPORT_STRUCTURED
                        ? cac::admissibility_json(session->session, rep)
                        : cac::admissibility_text(session->session, rep));
    cac_verdict v = CAC_REJECTED;
    if (rep.overall == cac::Overall::Admissible) v = CAC_ADMISSIBLE;
    if (rep.overall == cac::Overall::AdmissibleWithAssertions) v = CAC_ADMISSIBLE_WITH_ASSERTIONS;
    if (verdict) *verdict = v;
    if (v == CAC_REJECTED) {
      session->last_error = "rejected";
      return CAC_CHECK_FAILED;
    }
    return CAC_OK;
  });
}

const char* cac_last_error(const cac_session* session) {
  return session ? session->last_error.c_str() : "NULL session";
}

void cac_string_free(char* s) { std::free(s); }

}  // extern "C"
