#include "hbody/todd_coxeter.hpp"

#include <vector>

#include "hbody/error.hpp"

namespace hbody {

  namespace {
    constexpr int undefined = -1;

    class CosetTable {
     public:
      CosetTable(Presentation const& p, std::size_t cap)
          : _cols(2 * p.gen_count()), _cap(cap) {
        for (auto const& rel : p.relators) {
          std::vector<int> cols;
          for (Letter x : rel.letters()) {
            cols.push_back(column(x));
          }
          _relators.push_back(std::move(cols));
        }
        new_coset();
      }

      void run() {
        do {
          hlt_pass();
        } while (!complete());
      }

      // Every live coset has a full row and traces each relator to itself.
      bool complete() const {
        for (int c = 0; c < static_cast<int>(_forward.size()); ++c) {
          if (!live(c)) {
            continue;
          }
          for (int x = 0; x < _cols; ++x) {
            if (entry(c, x) == undefined || !live(entry(c, x))) {
              return false;
            }
          }
        }
        for (int c = 0; c < static_cast<int>(_forward.size()); ++c) {
          if (!live(c)) {
            continue;
          }
          for (auto const& rel : _relators) {
            int f = c;
            for (int x : rel) {
              f = entry(f, x);
            }
            if (f != c) {
              return false;
            }
          }
        }
        return true;
      }

      void hlt_pass() {
        for (int alpha = 0; alpha < static_cast<int>(_forward.size()); ++alpha) {
          for (auto const& rel : _relators) {
            if (!live(alpha)) {
              break;
            }
            scan(alpha, rel, true);
          }
          for (int x = 0; x < _cols && live(alpha); ++x) {
            if (entry(alpha, x) == undefined) {
              define(alpha, x);
            }
          }
        }
      }

      // Live cosets renumbered 0..n-1 in order; returns the generator
      // columns as permutations.
      std::vector<Permutation> permutations() const {
        std::vector<int> number(_forward.size(), undefined);
        int              n = 0;
        for (std::size_t c = 0; c < _forward.size(); ++c) {
          if (_forward[c] == static_cast<int>(c)) {
            number[c] = n++;
          }
        }
        std::vector<Permutation> perms;
        for (int x = 0; x < _cols; x += 2) {
          std::vector<std::uint32_t> images;
          images.reserve(static_cast<std::size_t>(n));
          for (std::size_t c = 0; c < _forward.size(); ++c) {
            if (_forward[c] == static_cast<int>(c)) {
              images.push_back(static_cast<std::uint32_t>(number[entry(static_cast<int>(c), x)]));
            }
          }
          perms.emplace_back(std::move(images));
        }
        return perms;
      }

     private:
      static int column(Letter x) {
        return static_cast<int>(2 * x.gen() + (x.is_inverse() ? 1 : 0));
      }
      static int inverse_column(int x) {
        return x ^ 1;
      }

      bool live(int c) const {
        return _forward[c] == c;
      }

      int& entry(int c, int x) {
        return _table[static_cast<std::size_t>(c) * _cols + x];
      }
      int entry(int c, int x) const {
        return _table[static_cast<std::size_t>(c) * _cols + x];
      }

      int new_coset() {
        int c = static_cast<int>(_forward.size());
        _forward.push_back(c);
        _table.resize(_table.size() + _cols, undefined);
        ++_live;
        return c;
      }

      void define(int alpha, int x) {
        if (_live >= _cap) {
          lookahead();
          if (_live >= _cap) {
            throw CapExceeded("coset", _cap);
          }
          if (!live(alpha) || entry(alpha, x) != undefined) {
            return;
          }
        }
        int beta = new_coset();
        entry(alpha, x)                   = beta;
        entry(beta, inverse_column(x))    = alpha;
      }

      // Scan every live coset under every relator without defining new
      // cosets, recording deductions and coincidences.
      void lookahead() {
        for (int beta = 0; beta < static_cast<int>(_forward.size()); ++beta) {
          for (auto const& rel : _relators) {
            if (!live(beta)) {
              break;
            }
            scan(beta, rel, false);
          }
        }
      }

      // Scan alpha under rel, filling gaps with new cosets when `fill`.
      void scan(int alpha, std::vector<int> const& rel, bool fill) {
        int f = alpha, b = alpha;
        int i = 0, j = static_cast<int>(rel.size()) - 1;
        while (true) {
          while (i <= j && entry(f, rel[i]) != undefined) {
            f = entry(f, rel[i]);
            ++i;
          }
          if (i > j) {
            if (f != b) {
              coincidence(f, b);
            }
            return;
          }
          while (j >= i && entry(b, inverse_column(rel[j])) != undefined) {
            b = entry(b, inverse_column(rel[j]));
            --j;
          }
          if (j < i) {
            coincidence(f, b);
            return;
          }
          if (i == j) {
            entry(f, rel[i])                 = b;
            entry(b, inverse_column(rel[i])) = f;
            return;
          }
          if (!fill) {
            return;
          }
          define(f, rel[i]);
          if (!live(f) || !live(b)) {
            // a lookahead inside define merged cosets; rescan later
            return;
          }
        }
      }

      int rep(int c) {
        int root = c;
        while (_forward[root] != root) {
          root = _forward[root];
        }
        while (_forward[c] != root) {
          int next    = _forward[c];
          _forward[c] = root;
          c           = next;
        }
        return root;
      }

      void merge(int k, int l, std::vector<int>& queue) {
        int phi = rep(k), psi = rep(l);
        if (phi == psi) {
          return;
        }
        int mu = std::min(phi, psi), nu = std::max(phi, psi);
        _forward[nu] = mu;
        --_live;
        queue.push_back(nu);
      }

      void coincidence(int alpha, int beta) {
        std::vector<int> queue;
        merge(alpha, beta, queue);
        for (std::size_t q = 0; q < queue.size(); ++q) {
          int gamma = queue[q];
          for (int x = 0; x < _cols; ++x) {
            int delta = entry(gamma, x);
            if (delta == undefined) {
              continue;
            }
            if (entry(delta, inverse_column(x)) == gamma) {
              entry(delta, inverse_column(x)) = undefined;
            }
            int mu = rep(gamma), nu = rep(delta);
            if (entry(mu, x) != undefined) {
              merge(nu, entry(mu, x), queue);
            } else if (entry(nu, inverse_column(x)) != undefined) {
              merge(mu, entry(nu, inverse_column(x)), queue);
            } else {
              entry(mu, x)                  = nu;
              entry(nu, inverse_column(x))  = mu;
            }
          }
        }
      }

      int                           _cols;
      std::size_t                   _cap;
      std::size_t                   _live = 0;
      std::vector<std::vector<int>> _relators;
      std::vector<int>              _forward;
      std::vector<int>              _table;
    };
  }  // namespace

  FiniteGroup coset_enumerate(Presentation const& p,
                              std::string         name,
                              CosetOptions const& opts) {
    for (auto const& rel : p.relators) {
      if (rel.rank() != p.gen_count()) {
        throw InvalidArgument("relator rank does not match the generator count");
      }
    }
    CosetTable table(p, opts.coset_cap);
    table.run();
    GroupOptions gopts;
    gopts.order_cap = opts.coset_cap;
    return FiniteGroup::from_permutations(
        std::move(name), table.permutations(), p.gen_names, p, gopts);
  }

}  // namespace hbody
