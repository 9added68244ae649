#include "hbody/kernel_orbit.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "hbody/error.hpp"

namespace hbody {

  Epimorphism precompose(Epimorphism const& theta, TwistAuto const& f) {
    ImageTuple images{};
    for (std::size_t i = 0; i < 4; ++i) {
      images[i] = theta.evaluate(f.images[i]);
    }
    return Epimorphism(theta.group_ptr(), images);
  }

  ImageTuple canonical_tuple(ImageTuple const& t, std::vector<Automorphism> const& auts) {
    ImageTuple best = t;
    for (auto const& phi : auts) {
      ImageTuple image{phi(t[0]), phi(t[1]), phi(t[2]), phi(t[3])};
      best = std::min(best, image);
    }
    return best;
  }

  bool kernel_equal(Epimorphism const&               theta1,
                    Epimorphism const&               theta2,
                    std::vector<Automorphism> const& auts) {
    if (theta1.group_ptr() != theta2.group_ptr()) {
      throw InvalidArgument("kernel_equal needs epimorphisms onto the same group");
    }
    auto const& t1 = theta1.images();
    auto const& t2 = theta2.images();
    if (t1 == t2) {
      return true;
    }
    return std::any_of(auts.begin(), auts.end(), [&](Automorphism const& phi) {
      return phi(t1[0]) == t2[0] && phi(t1[1]) == t2[1] && phi(t1[2]) == t2[2]
             && phi(t1[3]) == t2[3];
    });
  }

  KernelOrbit kernel_orbit(Epimorphism const&               theta,
                           std::vector<Automorphism> const& auts,
                           KernelOrbitOptions const&        opts) {
    std::array<TwistAuto, 10> twists;
    for (int j = 1; j <= 10; ++j) {
      twists[j - 1] = sigma(j);
    }
    KernelOrbit                     orbit{theta, {}, {}, {}};
    std::map<ImageTuple, std::size_t> index;
    auto add = [&](Epimorphism const& e) {
      ImageTuple key = canonical_tuple(e.images(), auts);
      auto [it, fresh] = index.emplace(key, orbit.classes.size());
      if (fresh) {
        if (orbit.classes.size() >= opts.class_cap) {
          throw CapExceeded("kernel class", opts.class_cap);
        }
        orbit.classes.push_back(e);
        orbit.canonical.push_back(key);
      }
      return it->second;
    };
    add(theta);
    // classes are processed in discovery order, which is breadth first
    for (std::size_t i = 0; i < orbit.classes.size(); ++i) {
      std::array<std::size_t, 10> row{};
      for (std::size_t j = 0; j < 10; ++j) {
        row[j] = add(precompose(orbit.classes[i], twists[j]));
      }
      orbit.moves.push_back(row);
    }
    return orbit;
  }

  namespace {
    std::optional<std::size_t> witness_class(KernelOrbit const& orbit, Word const& w) {
      for (std::size_t j = 0; j < orbit.classes.size(); ++j) {
        if (!orbit.classes[j].kills(w)) {
          return j;
        }
      }
      return std::nullopt;
    }

    void summarize(IntersectionResult& result) {
      for (std::size_t i = 0; i < result.certificate.size(); ++i) {
        if (!result.certificate[i]) {
          result.avoids       = false;
          result.first_common = i;
          return;
        }
      }
    }
  }  // namespace

  IntersectionResult intersection_avoids_c0(KernelOrbit const& orbit, OrbitSet const& s) {
    IntersectionResult result;
    auto const&        entries = s.entries();
    result.certificate.resize(entries.size());
    auto const n = static_cast<std::ptrdiff_t>(entries.size());
#pragma omp parallel for schedule(dynamic, 64)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      result.certificate[i] = witness_class(orbit, entries[i].word);
    }
    summarize(result);
    return result;
  }

  namespace reference {
    IntersectionResult intersection_avoids_c0(KernelOrbit const& orbit, OrbitSet const& s) {
      IntersectionResult result;
      for (auto const& e : s.entries()) {
        result.certificate.push_back(witness_class(orbit, e.word));
      }
      summarize(result);
      return result;
    }
  }  // namespace reference

  namespace {
    // Bounds memory for long tuples independently of the element cap.
    constexpr std::size_t tuple_entry_budget = 16'000'000;

    struct TupleHash {
      std::size_t operator()(std::vector<Element> const& v) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (Element x : v) {
          h = (h ^ x) * 1099511628211ull;
        }
        return h;
      }
    };
  }  // namespace

  std::optional<std::size_t> fiber_group_order(KernelOrbit const& orbit, std::size_t cap) {
    std::size_t const  r = orbit.r();
    FiniteGroup const& g = orbit.source.group();
    std::array<std::vector<Element>, 4> gens;
    for (std::size_t i = 0; i < 4; ++i) {
      for (auto const& theta : orbit.classes) {
        gens[i].push_back(theta.images()[i]);
      }
    }
    std::vector<Element> one(r, FiniteGroup::identity());
    std::unordered_set<std::vector<Element>, TupleHash> seen{one};
    std::vector<std::vector<Element>>                   queue{one};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      for (auto const& s : gens) {
        std::vector<Element> y(r);
        for (std::size_t k = 0; k < r; ++k) {
          y[k] = g.mul(queue[q][k], s[k]);
        }
        if (seen.insert(y).second) {
          if (seen.size() > cap || seen.size() * r > tuple_entry_budget) {
            return std::nullopt;
          }
          queue.push_back(std::move(y));
        }
      }
    }
    return queue.size();
  }

}  // namespace hbody
