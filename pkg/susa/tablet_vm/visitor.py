"""

The `visitor` module provides the dispatch shared by the script validator and the interpreter.

A `Visitor` walks the steps of a `Script` in order. For each step it tries the methods named `<prefix>_<suffix>` for every suffix in the opcode's lineage, e.g. `execute_mul`, `execute_binary`, `execute_step`, and calls the first one that exists. Subclasses choose their prefix when they are declared::

    class ScriptValidator(Visitor, visit_method_prefix="validate"):
        def validate_step(self, step): ...

If a subclass with a custom prefix does not define `<prefix>` or `<prefix>_element`, the base `visit` and `visit_element` behaviour is installed under the prefixed names.
"""
import typing

from susa.tablet_vm.elements import Script, Step

__all__ = ("Visitor",)


class Visitor:
    """
    Base class for step-by-step processing of a script.

    Attributes:
        visit_method_prefix (str):
             The prefix of the dispatch methods. Defaults to `visit`.
        index (int):
             The 1-based index of the step being visited, 0 before the first.

    """

    visit_method_prefix: str = "visit"
    index: int

    def __init_subclass__(cls, visit_method_prefix: typing.Optional[str] = None, **kwargs):
        super().__init_subclass__(**kwargs)
        cls.visit_method_prefix = visit_method_prefix or cls.visit_method_prefix
        if cls.visit_method_prefix != Visitor.visit_method_prefix:
            for postfix in ("", "_element"):
                method_name = f"{cls.visit_method_prefix}{postfix}"
                if not hasattr(cls, method_name):
                    setattr(
                        cls,
                        method_name,
                        getattr(Visitor, f"{Visitor.visit_method_prefix}{postfix}"),
                    )

    def __init__(self):
        self.index = 0

    def visit_element(self, step: Step, *args, **kwargs):
        """
        Dispatches one step to the most specific method available for its opcode.

        Raises:
            NotImplementedError:
                 If no method in the lineage exists.

        """
        for suffix in step.opcode.lineage:
            method = getattr(self, f"{self.visit_method_prefix}_{suffix}", None)
            if method is not None:
                return method(step, *args, **kwargs)
        raise NotImplementedError(
            f"{type(self).__name__} cannot handle {step.opcode.value}"
        )

    def visit(self, script: Script):
        """Visits every step of a script in order."""
        for self.index, step in enumerate(script.steps, start=1):
            getattr(self, f"{self.visit_method_prefix}_element")(step)
