from django.apps import AppConfig


class QsimConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'qsim'
