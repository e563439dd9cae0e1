// Copyright 2026 The umine Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Replacement global allocation operators that drive the counters in
// mem_meter.hpp. Include from exactly one translation unit of a binary;
// definitions here are non-inline on purpose so a second inclusion fails to
// link rather than silently double-counting.
//
// Sizes are the allocator's usable sizes (malloc_usable_size), i.e. real
// heap consumption, not requested bytes.

#include <malloc.h>

#include <cerrno>
#include <cstdlib>
#include <new>

#include "umine/mem_meter.hpp"

namespace umine::mem::detail {

// noinline keeps the malloc/free calls opaque at operator new/delete call
// sites; otherwise GCC pairs the inlined free() against operator new and
// warns about a mismatch that is not there.
[[gnu::noinline]] inline void* checked_alloc(std::size_t size) noexcept {
  void* p = std::malloc(size ? size : 1);
  if (p) note_alloc(malloc_usable_size(p));
  return p;
}

[[gnu::noinline]] inline void* checked_aligned_alloc(
    std::size_t size, std::size_t align) noexcept {
  void* p = nullptr;
  if (align < sizeof(void*)) align = sizeof(void*);
  if (posix_memalign(&p, align, size ? size : align) != 0) return nullptr;
  note_alloc(malloc_usable_size(p));
  return p;
}

[[gnu::noinline]] inline void counted_free(void* p) noexcept {
  if (!p) return;
  note_free(malloc_usable_size(p));
  std::free(p);
}

}  // namespace umine::mem::detail

void* operator new(std::size_t size) {
  void* p = umine::mem::detail::checked_alloc(size);
  if (!p) throw std::bad_alloc();
  return p;
}

void* operator new[](std::size_t size) {
  void* p = umine::mem::detail::checked_alloc(size);
  if (!p) throw std::bad_alloc();
  return p;
}

void* operator new(std::size_t size, const std::nothrow_t&) noexcept {
  return umine::mem::detail::checked_alloc(size);
}

void* operator new[](std::size_t size, const std::nothrow_t&) noexcept {
  return umine::mem::detail::checked_alloc(size);
}

void* operator new(std::size_t size, std::align_val_t align) {
  void* p = umine::mem::detail::checked_aligned_alloc(
      size, static_cast<std::size_t>(align));
  if (!p) throw std::bad_alloc();
  return p;
}

void* operator new[](std::size_t size, std::align_val_t align) {
  void* p = umine::mem::detail::checked_aligned_alloc(
      size, static_cast<std::size_t>(align));
  if (!p) throw std::bad_alloc();
  return p;
}

void* operator new(std::size_t size, std::align_val_t align,
                   const std::nothrow_t&) noexcept {
  return umine::mem::detail::checked_aligned_alloc(
      size, static_cast<std::size_t>(align));
}

void* operator new[](std::size_t size, std::align_val_t align,
                     const std::nothrow_t&) noexcept {
  return umine::mem::detail::checked_aligned_alloc(
      size, static_cast<std::size_t>(align));
}

void operator delete(void* p) noexcept { umine::mem::detail::counted_free(p); }
void operator delete[](void* p) noexcept {
  umine::mem::detail::counted_free(p);
}
void operator delete(void* p, std::size_t) noexcept {
  umine::mem::detail::counted_free(p);
}
void operator delete[](void* p, std::size_t) noexcept {
  umine::mem::detail::counted_free(p);
}
void operator delete(void* p, const std::nothrow_t&) noexcept {
  umine::mem::detail::counted_free(p);
}
void operator delete[](void* p, const std::nothrow_t&) noexcept {
  umine::mem::detail::counted_free(p);
}
void operator delete(void* p, std::align_val_t) noexcept {
  umine::mem::detail::counted_free(p);
}
void operator delete[](void* p, std::align_val_t) noexcept {
  umine::mem::detail::counted_free(p);
}
void operator delete(void* p, std::size_t, std::align_val_t) noexcept {
  umine::mem::detail::counted_free(p);
}
void operator delete[](void* p, std::size_t, std::align_val_t) noexcept {
  umine::mem::detail::counted_free(p);
}
void operator delete(void* p, std::align_val_t, const std::nothrow_t&) noexcept {
  umine::mem::detail::counted_free(p);
}
void operator delete[](void* p, std::align_val_t,
                       const std::nothrow_t&) noexcept {
  umine::mem::detail::counted_free(p);
}
