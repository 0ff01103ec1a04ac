from django.apps import AppConfig


class HadamardappConfig(AppConfig):
    name = 'HadamardApp'
    verbose_name = 'Hadamard inverses'
