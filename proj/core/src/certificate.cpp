#include "jref/errors.hpp"
#include "jref/saturation.hpp"

namespace jref {

  namespace {

    void checkShape(const CertNode& node) {
      switch (node.kind) {
        case CertNode::Kind::Branch:
          if (!node.target || node.target->kind() != Kind::Implies)
            throw MalformedCertificate("branch node without an implication to split");
          if (node.children.size() != 2) throw MalformedCertificate("branch node needs exactly two children");
          for (const CertNode& c : node.children) checkShape(c);
          break;
        case CertNode::Kind::Failed:
          if (!node.witness) throw MalformedCertificate("failed leaf without a witness");
          [[fallthrough]];
        default:
          if (!node.children.empty()) throw MalformedCertificate("leaf node with children");
      }
      for (const CertStep& s : node.steps) {
        if (s.block < 1 || s.block > 3) throw MalformedCertificate("step refers to block " + std::to_string(s.block));
        if (s.block != 3 && !s.domain.empty()) throw MalformedCertificate("only block 3 steps carry a domain");
      }
    }

    bool closesWith(const CertNode& node, std::size_t used, const Formula& witness) {
      return node.kind == CertNode::Kind::Failed && used == node.steps.size() && node.witness == witness;
    }

    bool replay(SaturationState st, const CertNode& node) {
      std::size_t k = 0;
      auto expect = [&](const CertStep& step) {
        if (k >= node.steps.size() || node.steps[k] != step) return false;
        ++k;
        return true;
      };
      for (;;) {
        closeDelta(st);
        if (auto w = overlap(st)) return closesWith(node, k, *w);
        if (auto target = pendingImplication(st)) {
          if (node.kind != CertNode::Kind::Branch || k != node.steps.size() || node.target != *target) return false;
          return replay(splitLeft(st, *target), node.children[0])
                 && replay(splitRight(st, *target), node.children[1]);
        }
        if (!expect(CertStep{1, {}})) return false;

        auto b2 = block2(st);
        if (auto* f = std::get_if<Failed>(&b2)) return closesWith(node, k, f->witness);
        st = std::move(std::get<SaturationState>(b2));
        if (!expect(CertStep{2, {}})) return false;

        Block3Outcome b3 = block3(st);
        switch (b3.kind) {
          case Block3Outcome::Kind::NotUnifiable:
            return node.kind == CertNode::Kind::NotUnifiable && k == node.steps.size();
          case Block3Outcome::Kind::Failed:
            return closesWith(node, k, *b3.witness);
          case Block3Outcome::Kind::Success:
            return false;
          case Block3Outcome::Kind::Continue: {
            VarSet dom = b3.state.theta.domain();
            if (!expect(CertStep{3, std::vector<Var>(dom.begin(), dom.end())})) return false;
            st = std::move(b3.state);
            break;
          }
        }
      }
    }

  } // namespace

  bool replayCertificate(const Formula& f, const Certificate& cert) {
    checkShape(cert.root);
    if (cert.formula != f) return false;
    return replay(initState(f), cert.root);
  }

} // namespace jref
