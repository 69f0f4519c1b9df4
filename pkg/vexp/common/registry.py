"""
Copyright (c) Facebook, Inc. and its affiliates.

This source code is licensed under the MIT license found in the
LICENSE file in the root directory of this source tree.
"""

"""
Registry is central source of truth. It maintains mappings of field
backends, CLI tasks and property-suite checks to unique keys. Special
functions in registry can be used as decorators to register each kind.

Import the global registry object using

``from vexp.common.registry import registry``

Various decorators for registry different kind of classes with unique keys

- Register a field backend: ``@registry.register_field``
- Register a CLI task: ``@registry.register_task``
- Register a property check: ``@registry.register_check``
"""


class Registry:
    r"""Class for registry object which acts as central source of truth."""
    mapping = {
        # Mappings to respective classes.
        "field_name_mapping": {},
        "task_name_mapping": {},
        "check_name_mapping": {},
        "state": {},
    }

    @classmethod
    def register_field(cls, name):
        r"""Register a field backend to registry with key 'name'

        Args:
            name: Key with which the backend will be registered.

        Usage::

            from vexp.common.registry import registry
            from vexp.fields.base import Field

            @registry.register_field("prime")
            class PrimeField(Field):
                ...
        """

        def wrap(func):
            from vexp.fields.base import Field

            assert issubclass(
                func, Field
            ), "All field backends must inherit Field class"
            cls.mapping["field_name_mapping"][name] = func
            return func

        return wrap

    @classmethod
    def register_task(cls, name):
        r"""Register a new task to registry with key 'name'
        Args:
            name: Key with which the task will be registered.
        Usage::
            from vexp.common.registry import registry
            from vexp.tasks.task import BaseTask
            @registry.register_task("eval")
            class EvalTask(BaseTask):
                ...
        """

        def wrap(func):
            cls.mapping["task_name_mapping"][name] = func
            return func

        return wrap

    @classmethod
    def register_check(cls, name):
        r"""Register a property-suite check with key 'name'. The decorated
        callable receives ``(ctx)`` and records instances with ``ctx.record``.

        Usage::

            from vexp.common.registry import registry

            @registry.register_check("laplace_zero")
            def laplace_zero(ctx):
                ...
        """

        def wrap(func):
            cls.mapping["check_name_mapping"][name] = func
            return func

        return wrap

    @classmethod
    def register(cls, name, obj):
        r"""Register an item to registry with key 'name'

        Args:
            name: Key with which the item will be registered.

        Usage::

            from vexp.common.registry import registry

            registry.register("config", {})
        """
        path = name.split(".")
        current = cls.mapping["state"]

        for part in path[:-1]:
            if part not in current:
                current[part] = {}
            current = current[part]

        current[path[-1]] = obj

    @classmethod
    def __lookup_error(cls, name: str, mapping_name: str):
        kind = mapping_name[: -len("_name_mapping")]
        existing_keys = [
            f"'{key}'" for key in sorted(cls.mapping[mapping_name].keys())
        ]
        existing_keys = (
            ", ".join(existing_keys[:-1]) + " or " + existing_keys[-1]
            if existing_keys
            else ""
        )
        existing_keys_str = (
            f" (one of {existing_keys})" if existing_keys else ""
        )
        return RuntimeError(
            f"Failed to find the {kind} '{name}'. "
            f"Use a {kind} from the registry{existing_keys_str}."
        )

    @classmethod
    def get_class(cls, name: str, mapping_name: str):
        existing_mapping = cls.mapping[mapping_name].get(name, None)
        if existing_mapping is None:
            raise cls.__lookup_error(name, mapping_name)
        return existing_mapping

    @classmethod
    def get_field_class(cls, name):
        return cls.get_class(name, "field_name_mapping")

    @classmethod
    def get_task_class(cls, name):
        return cls.get_class(name, "task_name_mapping")

    @classmethod
    def get_check(cls, name):
        return cls.get_class(name, "check_name_mapping")

    @classmethod
    def list_checks(cls):
        return sorted(cls.mapping["check_name_mapping"].keys())

    @classmethod
    def get(cls, name, default=None):
        r"""Get an item from registry with key 'name'

        Args:
            name (string): Key whose value needs to be retreived.
            default: If passed and key is not in registry, default value will
                     be returned. Default: None
        Usage::

            from vexp.common.registry import registry

            config = registry.get("config")
        """
        name = name.split(".")
        value = cls.mapping["state"]
        for subname in name:
            value = value.get(subname, default)
            if value is default:
                break
        return value

    @classmethod
    def unregister(cls, name):
        r"""Remove an item from registry with key 'name'

        Args:
            name: Key which needs to be removed.
        Usage::

            from vexp.common.registry import registry

            config = registry.unregister("config")
        """
        return cls.mapping["state"].pop(name, None)


registry = Registry()
