#include "offside/kernels/kernels.hpp"

namespace offside::kernels {
namespace {

struct State {
  const Ops* table;
  Backend backend;
};

State initial_state() {
#if defined(OFFSIDE_HAVE_AVX2)
  if (avx2_supported()) return {&detail::avx2_ops, Backend::Avx2};
#endif
  return {&detail::scalar_ops, Backend::Scalar};
}

State& state() {
  static State s = initial_state();
  return s;
}

}  // namespace

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::Scalar:
      return "scalar";
    case Backend::Avx2:
      return "avx2";
  }
  return "?";
}

bool avx2_supported() {
#if defined(OFFSIDE_HAVE_AVX2)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const Ops& ops() { return *state().table; }

Backend active_backend() { return state().backend; }

bool select_backend(Backend b) {
  switch (b) {
    case Backend::Scalar:
      state() = {&detail::scalar_ops, Backend::Scalar};
      return true;
    case Backend::Avx2:
#if defined(OFFSIDE_HAVE_AVX2)
      if (avx2_supported()) {
        state() = {&detail::avx2_ops, Backend::Avx2};
        return true;
      }
#endif
      return false;
  }
  return false;
}

}  // namespace offside::kernels
