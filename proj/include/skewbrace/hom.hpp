#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "errors.hpp"
#include "group.hpp"
#include "perm.hpp"
#include "perm_group.hpp"

namespace skewbrace {

// A homomorphism between finite groups, stored as an image sequence.
// When the target is an automorphism group, dst is the Cayley table of
// the materialized PermGroup and image holds indices into its elements.
struct GroupHom {
  FiniteGroup src;
  FiniteGroup dst;
  std::vector<int> image;

  int operator()(int x) const { return image[static_cast<size_t>(x)]; }
};

inline bool is_hom_image(const FiniteGroup& src, const FiniteGroup& dst,
                         const std::vector<int>& image) {
  if (static_cast<int>(image.size()) != src.order()) return false;
  for (int v : image)
    if (v < 0 || v >= dst.order()) return false;
  if (image[0] != 0) return false;
  for (int x = 0; x < src.order(); ++x)
    for (int y = 0; y < src.order(); ++y)
      if (image[static_cast<size_t>(src.op(x, y))] !=
          dst.op(image[static_cast<size_t>(x)], image[static_cast<size_t>(y)]))
        return false;
  return true;
}

inline GroupHom make_hom(FiniteGroup src, FiniteGroup dst, std::vector<int> image) {
  require(is_hom_image(src, dst, image), errc::bad_input,
          "image sequence is not a homomorphism");
  return GroupHom{std::move(src), std::move(dst), std::move(image)};
}

inline std::vector<Perm> hom_perms(const GroupHom& hom, const PermGroup& target) {
  std::vector<Perm> out;
  out.reserve(hom.image.size());
  for (int i : hom.image) out.push_back(target.element(i));
  return out;
}

namespace detail {

// Close a partial image (-1 = unknown) under products; false on conflict.
inline bool propagate_images(const FiniteGroup& src, const FiniteGroup& dst,
                             std::vector<int>& image) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < src.order(); ++x) {
      if (image[static_cast<size_t>(x)] < 0) continue;
      for (int y = 0; y < src.order(); ++y) {
        if (image[static_cast<size_t>(y)] < 0) continue;
        int z = src.op(x, y);
        int w = dst.op(image[static_cast<size_t>(x)], image[static_cast<size_t>(y)]);
        int& slot = image[static_cast<size_t>(z)];
        if (slot < 0) {
          slot = w;
          changed = true;
        } else if (slot != w) {
          return false;
        }
      }
    }
  }
  return true;
}

// Enumerate maps src -> dst determined by generator images, in ascending
// candidate order. sink returns false to stop the search.
template <typename CandidateFilter, typename Sink>
bool search_maps(const FiniteGroup& src, const FiniteGroup& dst,
                 const std::vector<int>& gens, CandidateFilter&& keep, Sink&& sink) {
  std::vector<int> start(static_cast<size_t>(src.order()), -1);
  start[0] = 0;
  auto rec = [&](auto&& self, size_t gi, const std::vector<int>& img) -> bool {
    if (gi == gens.size()) return sink(img);
    int g = gens[gi];
    if (img[static_cast<size_t>(g)] >= 0) return self(self, gi + 1, img);
    for (int t = 0; t < dst.order(); ++t) {
      if (!keep(g, t)) continue;
      std::vector<int> next = img;
      next[static_cast<size_t>(g)] = t;
      if (!propagate_images(src, dst, next)) continue;
      if (!self(self, gi + 1, next)) return false;
    }
    return true;
  };
  return rec(rec, 0, start);
}

inline bool is_bijective_image(const std::vector<int>& image, int n) {
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (int v : image) {
    if (v < 0 || seen[static_cast<size_t>(v)]) return false;
    seen[static_cast<size_t>(v)] = 1;
  }
  return true;
}

}  // namespace detail

// All automorphisms of G, by backtracking on generator images. Candidates
// must preserve element order; bijectivity is checked on completion.
inline PermGroup automorphisms(const FiniteGroup& G) {
  std::vector<int> gens = generating_chain(G);
  std::vector<Perm> found;
  detail::search_maps(
      G, G, gens,
      [&](int g, int t) { return G.element_order(t) == G.element_order(g); },
      [&](const std::vector<int>& image) {
        if (detail::is_bijective_image(image, G.order())) found.emplace_back(image);
        return true;
      });
  return PermGroup::from_elements(std::move(found));
}

// All homomorphisms B -> T, in lexicographic order of image sequences.
inline std::vector<GroupHom> homomorphisms(const FiniteGroup& B, const PermGroup& T) {
  FiniteGroup dst = T.to_group();
  std::vector<int> gens = generating_chain(B);
  std::vector<std::vector<int>> images;
  detail::search_maps(
      B, dst, gens,
      [&](int g, int t) { return B.element_order(g) % dst.element_order(t) == 0; },
      [&](const std::vector<int>& image) {
        images.push_back(image);
        return true;
      });
  std::sort(images.begin(), images.end());
  std::vector<GroupHom> out;
  out.reserve(images.size());
  for (auto& im : images) out.push_back(GroupHom{B, dst, std::move(im)});
  return out;
}

inline std::vector<int> element_order_profile(const FiniteGroup& G) {
  std::vector<int> orders(static_cast<size_t>(G.order()));
  for (int x = 0; x < G.order(); ++x) orders[static_cast<size_t>(x)] = G.element_order(x);
  std::sort(orders.begin(), orders.end());
  return orders;
}

// A witness isomorphism if one exists. Prunes by the element-order multiset
// before backtracking.
inline std::optional<Perm> are_isomorphic(const FiniteGroup& G1, const FiniteGroup& G2) {
  if (G1.order() != G2.order()) return std::nullopt;
  if (element_order_profile(G1) != element_order_profile(G2)) return std::nullopt;
  std::vector<int> gens = generating_chain(G1);
  std::optional<Perm> witness;
  detail::search_maps(
      G1, G2, gens,
      [&](int g, int t) { return G1.element_order(g) == G2.element_order(t); },
      [&](const std::vector<int>& image) {
        if (!detail::is_bijective_image(image, G1.order())) return true;
        witness = Perm(Perm::unchecked{}, image);
        return false;
      });
  return witness;
}

}  // namespace skewbrace
