from ..errors import NotBipartiteError, NotConnectedError
from ..graph import DENSE_ORDER_CAP
from ..graph6 import parse_graph6, write_graph6
from ..tensor import bipartite_split, hair_ratio, tensor_charpoly, tensor_product
from .base_command import BaseCommand


class TensorCommand(BaseCommand):
    """Kronecker product of two graphs with its bipartite split when it exists"""

    def validate_args(self):
        graphs = getattr(self.args, "graphs", None) or []
        if graphs and len(graphs) != 2:
            raise ValueError("Invalid arguments: tensor needs exactly two graph6 strings")
        self.codes = list(graphs)

    def _factors(self):
        if self.codes:
            return [parse_graph6(code) for code in self.codes]
        factors = [g for _, g in self.read_graphs()]
        if len(factors) != 2:
            raise ValueError(f"Invalid input: tensor needs exactly two graph6 lines, got {len(factors)}")
        return factors

    def execute(self) -> int:
        g1, g2 = self._factors()
        product = tensor_product(g1, g2)
        result = {"product": write_graph6(product), "order": product.n}
        if product.n <= DENSE_ORDER_CAP:
            result["coefficients"] = tensor_charpoly(g1, g2).to_json()

        try:
            split = bipartite_split(g1, g2)
        except (NotBipartiteError, NotConnectedError) as e:
            result["split"] = None
            result["split_reason"] = str(e)
        else:
            result["split"] = [
                {
                    "graph6": write_graph6(component),
                    "order": component.n,
                    "class": verdict.label if verdict else None,
                    "hair_ratio": str(hair_ratio(component)),
                }
                for component, verdict in (
                    (split.even_component, split.even_class),
                    (split.odd_component, split.odd_class),
                )
            ]

        if self.is_json:
            self.emit_json(result)
            return 0

        self.emit(result["product"])
        if result["split"] is None:
            self.emit(f"no bipartite split: {result['split_reason']}")
        else:
            for component in result["split"]:
                self.emit(f"{component['graph6']}\t{component['class']}\thairs {component['hair_ratio']}")
        return 0
