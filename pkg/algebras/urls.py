from django.urls import path

from . import views

app_name = 'algebras'

urlpatterns = [
    path('', views.api_root, name='api-root'),

    # Single computations
    path('bracket/', views.BracketView.as_view(), name='bracket'),
    path('apply/', views.ApplyView.as_view(), name='apply'),
    path('solve-der/', views.SolveDerivationView.as_view(), name='solve-der'),
    path('witness/', views.WitnessView.as_view(), name='witness'),

    # 2-local maps
    path('verify-2local/', views.TwoLocalVerifyView.as_view(), name='verify-2local'),
    path('decompose-w22/', views.DecomposeView.as_view(), name='decompose-w22'),
    path('classify-thin/', views.ClassifyView.as_view(), name='classify-thin'),

    path('reproduce/<str:case>/', views.ReproduceView.as_view(), name='reproduce'),
]
