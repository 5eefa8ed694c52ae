#pragma once

#include "godeaux/topology.hpp"

#include <algorithm>
#include <cstdlib>

namespace godeaux::testing {

// Replays a certificate with its own bookkeeping and checks every step is a
// legal Tietze move, ending at the empty presentation.
inline bool replay(const TietzeCertificate& cert) {
  std::vector<Word> rels = cert.start.relators;
  std::vector<bool> gone(cert.start.generators.size(), false);
  for (const auto& st : cert.steps) {
    if (st.relator >= rels.size()) return false;
    Word& r = rels[st.relator];
    switch (st.kind) {
      case TietzeStep::Kind::cyclic_reduce: {
        Word w = r;
        while (w.size() >= 2 && w.front() == -w.back()) w = Word(w.begin() + 1, w.end() - 1);
        r = w;
        break;
      }
      case TietzeStep::Kind::delete_empty:
        if (!r.empty()) return false;
        rels.erase(rels.begin() + static_cast<long>(st.relator));
        break;
      case TietzeStep::Kind::eliminate: {
        const int g = static_cast<int>(st.generator) + 1;
        std::size_t count = 0, pos = 0;
        for (std::size_t i = 0; i < r.size(); ++i)
          if (std::abs(r[i]) == g) ++count, pos = i;
        if (count != 1 || gone[st.generator]) return false;
        // r = u g^e v, so g^e = u^-1 v^-1.
        Word value = inverse(Word(r.begin(), r.begin() + static_cast<long>(pos)));
        const Word vi = inverse(Word(r.begin() + static_cast<long>(pos) + 1, r.end()));
        value.insert(value.end(), vi.begin(), vi.end());
        if (r[pos] < 0) value = inverse(value);
        value = free_reduce(value);
        rels.erase(rels.begin() + static_cast<long>(st.relator));
        for (Word& w : rels) {
          Word out;
          for (int x : w) {
            if (std::abs(x) != g) {
              out.push_back(x);
              continue;
            }
            const Word piece = x > 0 ? value : inverse(value);
            out.insert(out.end(), piece.begin(), piece.end());
          }
          w = free_reduce(out);
        }
        gone[st.generator] = true;
        break;
      }
      case TietzeStep::Kind::multiply: {
        if (st.source >= rels.size() || st.source == st.relator) return false;
        const Word& s = rels[st.source];
        if (st.rotation >= std::max<std::size_t>(s.size(), 1)) return false;
        Word piece(s.begin() + static_cast<long>(st.rotation), s.end());
        piece.insert(piece.end(), s.begin(), s.begin() + static_cast<long>(st.rotation));
        if (st.invert) piece = inverse(piece);
        Word out = r;
        out.insert(out.end(), piece.begin(), piece.end());
        r = free_reduce(out);
        break;
      }
    }
  }
  return rels.empty() && std::all_of(gone.begin(), gone.end(), [](bool g) { return g; });
}

}  // namespace godeaux::testing
