#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "mac/classifier.hpp"
#include "mac/cell_oracle.hpp"
#include "mac/cohomology.hpp"
#include "mac/errors.hpp"
#include "mac/generate.hpp"
#include "mac/mac.h"
#include "mac/reports.hpp"

struct mac_complex {
  mac::SimplicialComplex value;
};

namespace {

thread_local std::string last_error;

mac_status fail(mac_status status, const char* message) {
  last_error = message;
  return status;
}

// Runs body, translating library exceptions into status codes.
template <typename F>
mac_status guarded(F&& body) noexcept {
  try {
    last_error.clear();
    body();
    return MAC_OK;
  } catch (const mac::GhostVertexError& e) {
    return fail(MAC_ERROR_GHOST_VERTEX, e.what());
  } catch (const mac::InputError& e) {
    return fail(MAC_ERROR_INPUT, e.what());
  } catch (const mac::ResourceError& e) {
    return fail(MAC_ERROR_RESOURCE, e.what());
  } catch (const mac::NotApplicableError& e) {
    return fail(MAC_ERROR_NOT_APPLICABLE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(MAC_ERROR_RESOURCE, "out of memory");
  } catch (const std::exception& e) {
    return fail(MAC_ERROR_INTERNAL, e.what());
  } catch (...) {
    return fail(MAC_ERROR_INTERNAL, "unknown error");
  }
}

mac::Limits to_limits(const mac_limits* limits) {
  mac::Limits out;
  if (limits != nullptr) {
    out.max_vertices = limits->max_vertices;
    out.max_cells = static_cast<std::size_t>(limits->max_cells);
    out.threads = limits->threads;
  }
  return out;
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw mac::InputError(std::string(what) + " must not be NULL");
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Build>
mac_status emit_json(char** out_json, Build&& build) {
  return guarded([&] {
    require(out_json, "out_json");
    *out_json = copy_string(build().dump());
  });
}

void copy_betti(const std::vector<std::int64_t>& betti, int64_t* out, size_t capacity, size_t* length) {
  require(length, "length");
  *length = betti.size();
  if (out == nullptr) return;
  for (std::size_t i = 0; i < betti.size() && i < capacity; ++i) out[i] = betti[i];
}

mac_status make_handle(mac_complex** out, mac::SimplicialComplex value) {
  *out = new mac_complex{std::move(value)};
  return MAC_OK;
}

}  // namespace

extern "C" {

const char* mac_version(void) { return "1.0.0"; }

const char* mac_status_name(mac_status status) {
  switch (status) {
    case MAC_OK: return "ok";
    case MAC_ERROR_INTERNAL: return "internal error";
    case MAC_ERROR_INPUT: return "input error";
    case MAC_ERROR_GHOST_VERTEX: return "ghost vertex";
    case MAC_ERROR_RESOURCE: return "resource limit";
    case MAC_ERROR_NOT_APPLICABLE: return "not applicable";
  }
  return "unknown status";
}

const char* mac_last_error(void) { return last_error.c_str(); }

mac_limits mac_default_limits(void) {
  const mac::Limits d;
  return mac_limits{d.max_vertices, d.max_cells, d.threads};
}

mac_status mac_complex_from_facets(int n, const uint64_t* facet_masks, size_t count, mac_complex** out) {
  return guarded([&] {
    require(out, "out");
    if (count > 0) require(facet_masks, "facet_masks");
    std::vector<mac::VertexSet> facets;
    facets.reserve(count);
    for (size_t i = 0; i < count; ++i) facets.emplace_back(facet_masks[i]);
    make_handle(out, mac::SimplicialComplex::from_facets(n, std::move(facets)));
  });
}

mac_status mac_complex_from_json(const char* json, mac_complex** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    make_handle(out, mac::report::parse_complex(json));
  });
}

mac_status mac_complex_generate(const char* family, int size, uint64_t seed, mac_complex** out) {
  return guarded([&] {
    require(family, "family");
    require(out, "out");
    make_handle(out, mac::generate(mac::parse_family(family), size, seed));
  });
}

mac_status mac_complex_join(const mac_complex* a, const mac_complex* b, mac_complex** out) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    make_handle(out, mac::join(a->value, b->value));
  });
}

mac_status mac_complex_full_subcomplex(const mac_complex* k, uint64_t subset, mac_complex** out) {
  return guarded([&] {
    require(k, "complex");
    require(out, "out");
    make_handle(out, mac::full_subcomplex(k->value, mac::VertexSet(subset)));
  });
}

void mac_complex_free(mac_complex* k) { delete k; }

int mac_complex_vertex_count(const mac_complex* k) { return k == nullptr ? -1 : k->value.vertex_count(); }

size_t mac_complex_facet_count(const mac_complex* k) { return k == nullptr ? 0 : k->value.facets().size(); }

uint64_t mac_complex_facet(const mac_complex* k, size_t index) {
  if (k == nullptr || index >= k->value.facets().size()) return 0;
  return k->value.facets()[index].bits();
}

int mac_complex_is_face(const mac_complex* k, uint64_t sigma) {
  return k != nullptr && k->value.is_face(mac::VertexSet(sigma)) ? 1 : 0;
}

mac_status mac_classify(const mac_complex* k, int* is_elliptic) {
  return guarded([&] {
    require(k, "complex");
    require(is_elliptic, "is_elliptic");
    *is_elliptic = mac::is_elliptic(mac::classify(k->value)) ? 1 : 0;
  });
}

mac_status mac_hochster_betti(const mac_complex* k, const mac_limits* limits, int64_t* out, size_t capacity,
                              size_t* length) {
  return guarded([&] {
    require(k, "complex");
    copy_betti(mac::hochster_betti(k->value, to_limits(limits)), out, capacity, length);
  });
}

mac_status mac_oracle_betti(const mac_complex* k, const mac_limits* limits, int64_t* out, size_t capacity,
                            size_t* length) {
  return guarded([&] {
    require(k, "complex");
    const mac::Limits l = to_limits(limits);
    copy_betti(mac::oracle_betti(mac::MomentAngleCellComplex::build(k->value, l), l.threads), out, capacity,
               length);
  });
}

mac_status mac_is_trivial_ring(const mac_complex* k, const mac_limits* limits, int* trivial) {
  return guarded([&] {
    require(k, "complex");
    require(trivial, "trivial");
    *trivial = mac::is_trivial_ring(k->value, to_limits(limits)).trivial ? 1 : 0;
  });
}

mac_status mac_report_complex(const mac_complex* k, char** out_json) {
  return emit_json(out_json, [&] {
    require(k, "complex");
    return mac::report::to_json(k->value);
  });
}

mac_status mac_report_classify(const mac_complex* k, char** out_json) {
  return emit_json(out_json, [&] {
    require(k, "complex");
    return mac::report::classify(k->value);
  });
}

mac_status mac_report_nonfaces(const mac_complex* k, char** out_json) {
  return emit_json(out_json, [&] {
    require(k, "complex");
    return mac::report::nonfaces(k->value);
  });
}

mac_status mac_report_betti(const mac_complex* k, const mac_limits* limits, char** out_json) {
  return emit_json(out_json, [&] {
    require(k, "complex");
    return mac::report::betti(k->value, to_limits(limits));
  });
}

mac_status mac_report_oracle_betti(const mac_complex* k, const mac_limits* limits, char** out_json) {
  return emit_json(out_json, [&] {
    require(k, "complex");
    return mac::report::oracle_betti(k->value, to_limits(limits));
  });
}

mac_status mac_report_ring(const mac_complex* k, const mac_limits* limits, char** out_json) {
  return emit_json(out_json, [&] {
    require(k, "complex");
    return mac::report::ring(k->value, to_limits(limits));
  });
}

mac_status mac_report_loop_ranks(const mac_complex* k, const mac_limits* limits, int truncation, double delta,
                                 char** out_json) {
  return emit_json(out_json, [&] {
    require(k, "complex");
    return mac::report::loop_ranks(k->value, to_limits(limits), truncation, delta);
  });
}

mac_status mac_report_crosscheck(const mac_complex* k, const mac_limits* limits, char** out_json) {
  return emit_json(out_json, [&] {
    require(k, "complex");
    return mac::report::crosscheck(k->value, to_limits(limits));
  });
}

void mac_string_free(char* s) { delete[] s; }

}  // extern "C"
