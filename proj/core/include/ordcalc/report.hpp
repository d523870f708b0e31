#ifndef ORDCALC_REPORT_HPP
#define ORDCALC_REPORT_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace ordcalc {

  struct Check {
    std::string              name;
    bool                     passed  = true;
    bool                     skipped = false;
    std::vector<std::size_t> witness;
    std::string              detail;
  };

  class AxiomReport {
   public:
    void add(Check c);
    void pass(std::string name, std::string detail = {});
    void fail(std::string name, std::vector<std::size_t> witness, std::string detail = {});
    void skip(std::string name, std::string reason);
    // pass or fail on a boolean, with the witness used only on failure
    void expect(std::string name, bool ok, std::vector<std::size_t> witness = {}, std::string detail = {});
    // prefix every entry of other with `prefix.` and append
    void merge(AxiomReport const& other, std::string const& prefix = {});

    bool ok() const;
    bool passed(std::string const& name) const;
    Check const* find(std::string const& name) const;
    std::vector<Check> const& checks() const noexcept {
      return _checks;
    }
    Check const* first_failure() const;
    std::string summary() const;

   private:
    std::vector<Check> _checks;
  };

}  // namespace ordcalc

#endif
