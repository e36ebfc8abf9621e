#ifndef MVCOORD_ACCEPTANCE_INTERNAL_HPP_
#define MVCOORD_ACCEPTANCE_INTERNAL_HPP_

#include <cstddef>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "mvcoord/acceptance.hpp"
#include "mvcoord/semisimple.hpp"

namespace mvcoord::acceptance {

  // Accumulates the cases of one named check, keeping the first failure.
  class Check {
   public:
    explicit Check(std::string name) : _name(std::move(name)) {}

    template <typename Describe>
    bool expect(bool ok, Describe&& describe) {
      ++_cases;
      if (!ok && _pass) {
        _pass   = false;
        _detail = describe();
      }
      return ok;
    }
    bool expect(bool ok) {
      return expect(ok, [] { return std::string("failed"); });
    }
    void note(std::string text) {
      _note = std::move(text);
    }

    CheckOutcome outcome() const;

   private:
    std::string _name;
    bool        _pass  = true;
    std::size_t _cases = 0;
    std::string _detail;
    std::string _note;
  };

  // Every composition (ordered signature) with total letters in 1..max_total.
  std::vector<Signature> signatures_up_to(std::size_t max_total);

  // All rows x cols matrices with entries in 0..max_entry and no zero row.
  std::vector<IntMatrix> matrices(std::size_t rows,
                                  std::size_t cols,
                                  Integer     max_entry);

  // Block-diagonal image computed from scratch: target coordinate i holds
  // mult(i, j) copies of x_j in source order.
  SemisimpleElement block_image(Signature const&         target,
                                IntMatrix const&         mult,
                                SemisimpleElement const& x);

  std::mt19937_64 make_rng(SuiteContext const& ctx, std::uint64_t stream);

  std::vector<CheckOutcome> criterion1(SuiteContext const& ctx);
  std::vector<CheckOutcome> criterion2(SuiteContext const& ctx);
  std::vector<CheckOutcome> criterion3(SuiteContext const& ctx);
  std::vector<CheckOutcome> criterion4(SuiteContext const& ctx);
  std::vector<CheckOutcome> criterion5(SuiteContext const& ctx);
  std::vector<CheckOutcome> criterion6(SuiteContext const& ctx);
  std::vector<CheckOutcome> criterion7(SuiteContext const& ctx);
  std::vector<CheckOutcome> criterion8(SuiteContext const& ctx);
  std::vector<CheckOutcome> criterion9(SuiteContext const& ctx);

}  // namespace mvcoord::acceptance

#endif  // MVCOORD_ACCEPTANCE_INTERNAL_HPP_
